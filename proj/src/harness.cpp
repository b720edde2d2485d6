#include "okp/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "okp/algorithms.hpp"
#include "okp/format.hpp"
#include "okp/io.hpp"
#include "okp/offline.hpp"
#include "okp/random.hpp"

namespace okp {
namespace {

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  for (std::size_t start = 0;;) {
    const auto comma = text.find(',', start);
    const auto part = trim(text.substr(start, comma - start));
    if (!part.empty()) out.emplace_back(part);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string csv_safe(std::string s) {
  std::replace(s.begin(), s.end(), ',', ';');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

constexpr std::string_view kRecordHeader =
    "instance_id,algorithm,prediction,predicted,profit,opt_profit,ratio,utilization,vhat,"
    "omegahat,error";

}  // namespace

double empirical_cr(double alg_profit, double opt_profit) {
  if (alg_profit < 0.0 || opt_profit < 0.0 || std::isnan(alg_profit) || std::isnan(opt_profit)) {
    throw std::invalid_argument("empirical_cr: profits must be non-negative");
  }
  if (opt_profit == 0.0) return 1.0;
  if (alg_profit == 0.0) return std::numeric_limits<double>::infinity();
  return opt_profit / alg_profit;
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  return mix64(seed ^ mix64(index + CounterRng::kGamma));
}

SweepConfig SweepConfig::parse(std::string_view text) {
  SweepConfig cfg;
  GenSpec gen;
  bool has_gen = false;
  std::istringstream in{std::string(text)};
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    auto t = trim(line);
    if (const auto hash = t.find('#'); hash != std::string_view::npos) t = trim(t.substr(0, hash));
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key(trim(t.substr(0, eq)));
    const auto value = trim(t.substr(eq + 1));
    try {
      if (key == "instances") {
        for (auto& p : split_list(value)) cfg.instance_paths.emplace_back(p);
      } else if (key == "algorithms") {
        cfg.algorithms = split_list(value);
      } else if (key == "predictions") {
        cfg.predictions = split_list(value);
      } else if (key == "seed") {
        cfg.seed = parse_u64(value, key);
      } else if (key == "parallelism") {
        cfg.parallelism = parse_u64(value, key);
      } else if (key == "out") {
        cfg.output_dir = std::string(value);
      } else if (key == "generate.kind") {
        gen.kind = std::string(value);
        has_gen = true;
      } else if (key == "generate.count") {
        cfg.generate_count = parse_u64(value, key);
      } else if (key == "generate.seed") {
        gen.seed = parse_u64(value, key);
      } else if (key.starts_with("generate.")) {
        gen.params[key.substr(9)] = parse_double(value, key);
      } else {
        throw ConfigError("unknown key '" + key + "'");
      }
    } catch (const DataError& e) {
      throw ConfigError("config line " + std::to_string(lineno) + ": " + e.what());
    } catch (const ConfigError& e) {
      throw ConfigError("config line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (has_gen) {
    cfg.generator = gen;
    if (cfg.generate_count == 0) cfg.generate_count = 1;
  }
  return cfg;
}

SweepConfig SweepConfig::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

void SweepConfig::validate() const {
  if (instance_paths.empty() && !(generator && generate_count > 0)) {
    throw ConfigError("sweep needs at least one instance");
  }
  if (algorithms.empty()) throw ConfigError("sweep needs at least one algorithm");
  if (predictions.empty()) throw ConfigError("sweep needs at least one prediction spec");
  if (parallelism == 0) throw ConfigError("parallelism must be >= 1");
  for (const auto& p : predictions) PredictionSpec::parse(p);
}

std::vector<NamedInstance> load_instances(const SweepConfig& config) {
  std::vector<NamedInstance> out;
  for (const auto& path : config.instance_paths) {
    std::optional<Bounds> bounds;
    if (std::filesystem::exists(metadata_path(path))) {
      bounds = bounds_from_metadata(read_metadata(metadata_path(path)));
    }
    out.push_back({path.filename().string(), read_instance_csv(path, bounds)});
  }
  if (config.generator) {
    for (std::size_t k = 0; k < config.generate_count; ++k) {
      GenSpec spec = *config.generator;
      spec.seed = substream_seed(config.generator->seed, k);
      for (auto& li : generate(spec)) {
        std::string id = "gen-" + std::to_string(k);
        if (!li.label.empty()) id += "-" + li.label;
        out.push_back({std::move(id), std::move(li.instance)});
      }
    }
  }
  return out;
}

RunRecord run_cell(const NamedInstance& instance, const std::string& algorithm,
                   const std::string& prediction, std::uint64_t prediction_seed) {
  RunRecord rec;
  rec.instance_id = instance.id;
  rec.algorithm = algorithm;
  rec.prediction = prediction;
  const auto info = critical_value(instance.instance);
  rec.opt_profit = info.opt_profit;
  rec.vhat = info.vhat;
  rec.omegahat = info.omegahat;
  try {
    const auto spec = PredictionSpec::parse(prediction);
    std::optional<Prediction> pred;
    if (spec.kind != PredictionSpec::Kind::None) {
      pred = make_prediction(instance.instance, spec, prediction_seed);
      rec.predicted = pred->to_string();
    } else {
      rec.predicted = "none";
    }
    const auto sol = online_run(algorithm, instance.instance, pred);
    validate_solution(instance.instance, sol);
    rec.profit = sol.profit;
    rec.utilization = sol.utilization;
    rec.ratio = empirical_cr(sol.profit, info.opt_profit);
  } catch (const ConfigError& e) {
    rec.error = csv_safe(e.what());
  } catch (const DataError& e) {
    rec.error = csv_safe(e.what());
  } catch (const std::domain_error& e) {
    rec.error = csv_safe(e.what());
  }
  if (!rec.ok()) rec.ratio = std::numeric_limits<double>::quiet_NaN();
  return rec;
}

std::vector<RunRecord> run_grid(const std::vector<NamedInstance>& instances,
                                const std::vector<std::string>& algorithms,
                                const std::vector<std::string>& predictions, std::uint64_t seed,
                                std::size_t parallelism) {
  const std::size_t per_instance = algorithms.size() * predictions.size();
  std::vector<RunRecord> records(instances.size() * per_instance);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t k = next++; k < instances.size(); k = next++) {
      try {
        const auto pseed = substream_seed(seed, k);
        std::size_t slot = k * per_instance;
        for (const auto& alg : algorithms) {
          for (const auto& pred : predictions) {
            records[slot++] = run_cell(instances[k], alg, pred, pseed);
          }
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(parallelism, 1, std::max<std::size_t>(1, instances.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

std::vector<RunRecord> run_sweep(const SweepConfig& config) {
  config.validate();
  const auto instances = load_instances(config);
  auto records = run_grid(instances, config.algorithms, config.predictions, config.seed,
                          config.parallelism);
  if (!config.output_dir.empty()) write_records_csv(config.output_dir / "runs.csv", records);
  return records;
}

void write_records_csv(const std::filesystem::path& path, std::span<const RunRecord> records) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path.string() + "'");
  out << kRecordHeader << '\n';
  for (const auto& r : records) {
    out << r.instance_id << ',' << r.algorithm << ',' << r.prediction << ',' << r.predicted << ','
        << format_double(r.profit) << ',' << format_double(r.opt_profit) << ','
        << format_double(r.ratio) << ',' << format_double(r.utilization) << ','
        << format_double(r.vhat) << ',' << format_double(r.omegahat) << ',' << r.error << '\n';
  }
}

std::vector<RunRecord> read_records_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  std::string line;
  if (!std::getline(in, line) || trim(line) != kRecordHeader) {
    throw DataError("'" + path.string() + "' is not a run-record CSV");
  }
  std::vector<RunRecord> out;
  for (std::size_t lineno = 2; std::getline(in, line); ++lineno) {
    if (trim(line).empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    if (cells.size() == 10) cells.emplace_back();
    if (cells.size() != 11) {
      throw DataError(path.string() + ":" + std::to_string(lineno) + ": expected 11 columns");
    }
    RunRecord r;
    r.instance_id = cells[0];
    r.algorithm = cells[1];
    r.prediction = cells[2];
    r.predicted = cells[3];
    r.profit = parse_double(cells[4]);
    r.opt_profit = parse_double(cells[5]);
    r.ratio = cells[6] == "nan" ? std::numeric_limits<double>::quiet_NaN() : parse_double(cells[6]);
    r.utilization = parse_double(cells[7]);
    r.vhat = parse_double(cells[8]);
    r.omegahat = parse_double(cells[9]);
    r.error = std::string(trim(cells[10]));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CdfPoint> cdf(std::span<const double> ratios) {
  if (ratios.empty()) throw std::invalid_argument("cdf: empty input");
  for (double r : ratios) {
    if (std::isnan(r)) throw std::invalid_argument("cdf: NaN ratio");
  }
  std::vector<double> sorted(ratios.begin(), ratios.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  std::vector<CdfPoint> out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i + 1 < sorted.size() && sorted[i + 1] == sorted[i]) continue;
    out.push_back({sorted[i], static_cast<double>(i + 1) / n});
  }
  return out;
}

}  // namespace okp
