#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "okp/algorithms.hpp"
#include "okp/harness.hpp"
#include "okp/instgen.hpp"
#include "okp/io.hpp"
#include "okp/offline.hpp"

namespace py = pybind11;

namespace {

okp::Instance make_instance(const std::vector<std::pair<double, double>>& items,
                            std::optional<std::pair<double, double>> bounds) {
  std::vector<okp::Item> v;
  v.reserve(items.size());
  for (const auto& [value, weight] : items) v.push_back({value, weight});
  std::optional<okp::Bounds> b;
  if (bounds) b = okp::Bounds{bounds->first, bounds->second};
  return okp::Instance(std::move(v), b);
}

py::dict record_dict(const okp::RunRecord& r) {
  py::dict d;
  d["instance_id"] = r.instance_id;
  d["algorithm"] = r.algorithm;
  d["prediction"] = r.prediction;
  d["predicted"] = r.predicted;
  d["profit"] = r.profit;
  d["opt_profit"] = r.opt_profit;
  d["ratio"] = r.ratio;
  d["utilization"] = r.utilization;
  d["vhat"] = r.vhat;
  d["omegahat"] = r.omegahat;
  d["error"] = r.error;
  return d;
}

}  // namespace

PYBIND11_MODULE(_okp, m) {
  m.doc() = "Online fractional knapsack with value predictions";

  py::register_exception<okp::ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<okp::DataError>(m, "DataError", PyExc_ValueError);
  py::register_exception<okp::InfeasibilityError>(m, "InfeasibilityError", PyExc_RuntimeError);

  py::class_<okp::Instance>(m, "Instance")
      .def(py::init(&make_instance), py::arg("items"), py::arg("bounds") = py::none(),
           "items: sequence of (value, weight); bounds: optional (L, U)")
      .def("__len__", &okp::Instance::size)
      .def_property_readonly("items",
                             [](const okp::Instance& inst) {
                               std::vector<std::pair<double, double>> out;
                               for (const auto& it : inst.items()) out.emplace_back(it.value, it.weight);
                               return out;
                             })
      .def_property_readonly("bounds",
                             [](const okp::Instance& inst) -> std::optional<std::pair<double, double>> {
                               if (!inst.bounds()) return std::nullopt;
                               return std::make_pair(inst.bounds()->lower, inst.bounds()->upper);
                             })
      .def("total_weight", &okp::Instance::total_weight)
      .def("prefix", &okp::Instance::prefix, py::arg("k"));

  py::class_<okp::Prediction>(m, "Prediction")
      .def_static("point", &okp::Prediction::point, py::arg("vhat"))
      .def_static("interval", &okp::Prediction::interval, py::arg("lo"), py::arg("hi"))
      .def("is_point", &okp::Prediction::is_point)
      .def("is_interval", &okp::Prediction::is_interval)
      .def("contains", &okp::Prediction::contains, py::arg("vhat"))
      .def("__str__", &okp::Prediction::to_string)
      .def("__repr__", [](const okp::Prediction& p) { return "Prediction(" + p.to_string() + ")"; });

  py::class_<okp::Solution>(m, "Solution")
      .def_readonly("decisions", &okp::Solution::decisions)
      .def_readonly("profit", &okp::Solution::profit)
      .def_readonly("utilization", &okp::Solution::utilization)
      .def_property_readonly("integral",
                             [](const okp::Solution& s) { return s.mode == okp::Mode::Integral; });

  m.def(
      "critical_value",
      [](const okp::Instance& inst) {
        const auto info = okp::critical_value(inst);
        py::dict d;
        d["vhat"] = info.vhat;
        d["omegahat"] = info.omegahat;
        d["opt"] = info.opt_profit;
        return d;
      },
      py::arg("instance"));
  m.def("fractional_opt", &okp::fractional_opt, py::arg("instance"));
  m.def(
      "integral_opt",
      [](const okp::Instance& inst) { return okp::integral_opt_bruteforce(inst); },
      py::arg("instance"));
  m.def(
      "run",
      [](const std::string& spec, const okp::Instance& inst, std::optional<okp::Prediction> pred) {
        py::gil_scoped_release release;
        return okp::online_run(spec, inst, pred);
      },
      py::arg("spec"), py::arg("instance"), py::arg("prediction") = py::none());
  m.def(
      "make_prediction",
      [](const okp::Instance& inst, const std::string& spec, std::uint64_t seed) {
        return okp::make_prediction(inst, okp::PredictionSpec::parse(spec), seed);
      },
      py::arg("instance"), py::arg("spec") = "exact", py::arg("seed") = 0);
  m.def(
      "generate",
      [](const std::string& kind, std::uint64_t seed, const std::map<std::string, double>& params) {
        const auto out = okp::generate(okp::GenSpec{kind, params, seed});
        std::vector<std::pair<std::string, okp::Instance>> res;
        for (const auto& li : out) res.emplace_back(li.label, li.instance);
        return res;
      },
      py::arg("kind"), py::arg("seed") = 0, py::arg("params") = std::map<std::string, double>{});
  m.def("ta_threshold", &okp::ta_threshold, py::arg("z"), py::arg("lower"), py::arg("upper"));
  m.def("empirical_cr", &okp::empirical_cr, py::arg("alg_profit"), py::arg("opt_profit"));
  m.def(
      "read_instance_csv",
      [](const std::filesystem::path& path, std::optional<std::pair<double, double>> bounds) {
        std::optional<okp::Bounds> b;
        if (bounds) b = okp::Bounds{bounds->first, bounds->second};
        return okp::read_instance_csv(path, b);
      },
      py::arg("path"), py::arg("bounds") = py::none());
  m.def("write_instance_csv", &okp::write_instance_csv, py::arg("path"), py::arg("instance"));
  m.def(
      "run_sweep",
      [](const std::string& config_text) {
        std::vector<okp::RunRecord> records;
        {
          py::gil_scoped_release release;
          records = okp::run_sweep(okp::SweepConfig::parse(config_text));
        }
        py::list out;
        for (const auto& r : records) out.append(record_dict(r));
        return out;
      },
      py::arg("config_text"), "Runs a sweep described by `key = value` config text.");
}
