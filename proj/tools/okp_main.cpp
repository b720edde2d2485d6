// okp: command-line front end.
//
//   okp generate --kind <kind> --seed <u64> [kind params] --out <file>
//   okp ingest   --source price|trace --in <csv> --n <int> --weight <real> --seed <u64> --out <file>
//   okp run      --alg <spec> --pred <spec> --instance <file> [--out <csv>]
//   okp sweep    --config <file>
//   okp report   --in <dir> [--cdf] --out <csv>
//
// Exit codes: 0 success, 1 configuration error, 2 data error, 3 internal
// invariant violation.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "okp/algorithms.hpp"
#include "okp/format.hpp"
#include "okp/harness.hpp"
#include "okp/ingest.hpp"
#include "okp/instgen.hpp"
#include "okp/io.hpp"
#include "okp/offline.hpp"

namespace fs = std::filesystem;

namespace {

enum ExitCode { kOk = 0, kConfig = 1, kData = 2, kInvariant = 3 };

// Generator parameters accepted as --<name> <value>.
const std::vector<std::string> kGenParams = {
    "n",     "L",     "U",     "value_exponent", "weight_exponent", "weight_scale",
    "omegahat", "epsilon", "lo", "hi", "m", "batches", "A", "B", "x", "N",
    "variant", "kappa", "c",  "vhat", "count"};

fs::path labeled_path(const fs::path& out, const std::string& label) {
  if (label.empty()) return out;
  fs::path p = out;
  p.replace_filename(out.stem().string() + "." + label + out.extension().string());
  return p;
}

std::optional<okp::Bounds> bounds_for(const fs::path& instance, std::optional<double> lo,
                                      std::optional<double> hi) {
  std::optional<okp::Bounds> bounds;
  if (fs::exists(okp::metadata_path(instance))) {
    bounds = okp::bounds_from_metadata(okp::read_metadata(okp::metadata_path(instance)));
  }
  if (lo || hi) {
    if (!(lo && hi) && !bounds) throw okp::ConfigError("--L and --U must be given together");
    okp::Bounds b = bounds.value_or(okp::Bounds{});
    if (lo) b.lower = *lo;
    if (hi) b.upper = *hi;
    bounds = b;
  }
  return bounds;
}

int cmd_generate(const std::string& kind, std::uint64_t seed,
                 const std::map<std::string, std::optional<double>>& params, const fs::path& out) {
  okp::GenSpec spec{kind, {}, seed};
  for (const auto& [k, v] : params) {
    if (v) spec.params[k] = *v;
  }
  for (const auto& li : okp::generate(spec)) {
    const auto path = labeled_path(out, li.label);
    okp::write_instance_csv(path, li.instance);
    auto meta = okp::describe_instance(li.instance);
    meta["kind"] = kind;
    meta["seed"] = std::to_string(seed);
    if (!li.label.empty()) meta["label"] = li.label;
    for (const auto& [k, v] : spec.params) meta["param." + k] = okp::format_double(v);
    okp::write_metadata(okp::metadata_path(path), meta);
    std::cout << path.string() << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Learning-augmented online knapsack toolkit"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Write a synthetic or adversarial instance");
  std::string gen_kind;
  std::uint64_t gen_seed = 0;
  fs::path gen_out;
  std::map<std::string, std::optional<double>> gen_params;
  gen->add_option("--kind", gen_kind,
                  "powerlaw | omega-powerlaw | spike-pair | interval-lb | three-batch | "
                  "x-nondecreasing | integral-lb")
      ->required();
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("--out", gen_out, "Instance CSV path (multi-instance kinds add .<label>)")
      ->required();
  for (const auto& name : kGenParams) {
    gen_params[name] = std::nullopt;
    gen->add_option("--" + name, gen_params[name], "generator parameter " + name);
  }

  // ingest
  auto* ing = app.add_subcommand("ingest", "Build an instance from a price series or trace");
  std::string ing_source;
  fs::path ing_in, ing_out;
  okp::IngestSpec ing_spec;
  std::vector<double> ing_factors;
  std::optional<double> ing_lo, ing_hi;
  ing->add_option("--source", ing_source, "price | trace")
      ->required()
      ->check(CLI::IsMember({"price", "trace"}));
  ing->add_option("--in", ing_in, "Input CSV")->required();
  ing->add_option("--n", ing_spec.sample_n, "Items to sample");
  ing->add_option("--weight", ing_spec.item_weight, "Weight of every item");
  ing->add_option("--seed", ing_spec.seed, "RNG seed");
  ing->add_option("--scale-lo", ing_spec.duration_scale_range.first, "Trace duration scale, low");
  ing->add_option("--scale-hi", ing_spec.duration_scale_range.second, "Trace duration scale, high");
  ing->add_option("--factors", ing_factors, "Trace resource factors")->delimiter(',');
  ing->add_option("--L", ing_lo, "Override lower value bound");
  ing->add_option("--U", ing_hi, "Override upper value bound");
  ing->add_option("--out", ing_out, "Instance CSV path")->required();

  // run
  auto* run = app.add_subcommand("run", "Run one algorithm on one instance");
  std::string run_alg, run_pred = "exact";
  fs::path run_instance, run_out;
  std::uint64_t run_seed = 0;
  std::optional<double> run_lo, run_hi;
  run->add_option("--alg", run_alg, "ta | ppn | ppb | ppa | ipa | ma:<l>:<inner> | conv:<inner>:<d>:<e>")
      ->required();
  run->add_option("--pred", run_pred, "Prediction spec (exact, point:<v>, width:<pct>, ...)");
  run->add_option("--instance", run_instance, "Instance CSV")->required();
  run->add_option("--seed", run_seed, "Seed for randomized predictions");
  run->add_option("--L", run_lo, "Lower value bound (overrides sidecar)");
  run->add_option("--U", run_hi, "Upper value bound (overrides sidecar)");
  run->add_option("--out", run_out, "Solution CSV path");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Run an (instance x algorithm x prediction) grid");
  fs::path sweep_config, sweep_out;
  std::size_t sweep_parallel = 0;
  sweep->add_option("--config", sweep_config, "key = value config file")->required();
  sweep->add_option("--out", sweep_out, "Output directory (overrides config)");
  sweep->add_option("--parallelism", sweep_parallel, "Worker threads (overrides config)");

  // report
  auto* rep = app.add_subcommand("report", "Summarize run records");
  fs::path rep_in, rep_out;
  bool rep_cdf = false;
  rep->add_option("--in", rep_in, "Directory of run-record CSVs (or one file)")->required();
  rep->add_flag("--cdf", rep_cdf, "Emit CDF rows instead of per-group summary");
  rep->add_option("--out", rep_out, "Output CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfig;
  }

  try {
    if (*gen) return cmd_generate(gen_kind, gen_seed, gen_params, gen_out);

    if (*ing) {
      ing_spec.source = ing_source == "price" ? okp::IngestSpec::Source::PriceSeries
                                              : okp::IngestSpec::Source::DurationTrace;
      if (!ing_factors.empty()) ing_spec.resource_factors = ing_factors;
      if (ing_lo || ing_hi) {
        if (!(ing_lo && ing_hi)) throw okp::ConfigError("--L and --U must be given together");
        ing_spec.bounds = okp::Bounds{*ing_lo, *ing_hi};
      }
      const auto inst = ing_spec.source == okp::IngestSpec::Source::PriceSeries
                            ? okp::load_price_series(ing_in, ing_spec)
                            : okp::load_duration_trace(ing_in, ing_spec);
      okp::write_instance_csv(ing_out, inst);
      auto meta = okp::describe_instance(inst);
      meta["source"] = ing_source;
      meta["seed"] = std::to_string(ing_spec.seed);
      okp::write_metadata(okp::metadata_path(ing_out), meta);
      std::cout << ing_out.string() << "\n";
      return kOk;
    }

    if (*run) {
      const auto bounds = bounds_for(run_instance, run_lo, run_hi);
      const okp::NamedInstance inst{run_instance.filename().string(),
                                    okp::read_instance_csv(run_instance, bounds)};
      const auto spec = okp::PredictionSpec::parse(run_pred);
      std::optional<okp::Prediction> pred;
      if (spec.kind != okp::PredictionSpec::Kind::None) {
        pred = okp::make_prediction(inst.instance, spec, run_seed);
      }
      const auto sol = okp::online_run(run_alg, inst.instance, pred);
      okp::validate_solution(inst.instance, sol);
      const auto info = okp::critical_value(inst.instance);
      if (!run_out.empty()) okp::write_solution_csv(run_out, inst.instance, sol);
      std::cout << "algorithm=" << run_alg << "\n"
                << "prediction=" << (pred ? pred->to_string() : "none") << "\n"
                << "profit=" << okp::format_double(sol.profit) << "\n"
                << "opt=" << okp::format_double(info.opt_profit) << "\n"
                << "ratio=" << okp::format_double(okp::empirical_cr(sol.profit, info.opt_profit))
                << "\n"
                << "utilization=" << okp::format_double(sol.utilization) << "\n";
      return kOk;
    }

    if (*sweep) {
      auto cfg = okp::SweepConfig::from_file(sweep_config);
      if (!sweep_out.empty()) cfg.output_dir = sweep_out;
      if (sweep_parallel > 0) cfg.parallelism = sweep_parallel;
      if (cfg.output_dir.empty()) throw okp::ConfigError("sweep needs an output directory");
      const auto records = okp::run_sweep(cfg);
      std::size_t errors = 0;
      for (const auto& r : records) errors += r.ok() ? 0 : 1;
      std::cout << "records=" << records.size() << " errors=" << errors << " out="
                << (cfg.output_dir / "runs.csv").string() << "\n";
      return kOk;
    }

    if (*rep) {
      std::vector<fs::path> files;
      if (fs::is_directory(rep_in)) {
        for (const auto& e : fs::directory_iterator(rep_in)) {
          if (e.path().extension() == ".csv") files.push_back(e.path());
        }
        std::sort(files.begin(), files.end());
      } else {
        files.push_back(rep_in);
      }
      std::map<std::pair<std::string, std::string>, std::vector<double>> groups;
      std::map<std::pair<std::string, std::string>, std::size_t> errors;
      for (const auto& f : files) {
        for (const auto& r : okp::read_records_csv(f)) {
          const auto key = std::make_pair(r.algorithm, r.prediction);
          if (r.ok()) {
            groups[key].push_back(r.ratio);
          } else {
            ++errors[key];
            groups.try_emplace(key);
          }
        }
      }
      if (groups.empty()) throw okp::DataError("no run records found under " + rep_in.string());
      if (rep_out.has_parent_path()) fs::create_directories(rep_out.parent_path());
      std::ofstream out(rep_out, std::ios::binary);
      if (!out) throw okp::DataError("cannot write '" + rep_out.string() + "'");
      if (rep_cdf) {
        out << "algorithm,prediction,ratio,cdf\n";
        for (const auto& [key, ratios] : groups) {
          if (ratios.empty()) continue;
          for (const auto& p : okp::cdf(ratios)) {
            out << key.first << ',' << key.second << ',' << okp::format_double(p.ratio) << ','
                << okp::format_double(p.fraction) << '\n';
          }
        }
      } else {
        out << "algorithm,prediction,count,errors,mean_ratio,max_ratio\n";
        for (const auto& [key, ratios] : groups) {
          double sum = 0.0, mx = 0.0;
          for (double r : ratios) {
            sum += r;
            mx = std::max(mx, r);
          }
          const double mean = ratios.empty() ? 0.0 : sum / static_cast<double>(ratios.size());
          out << key.first << ',' << key.second << ',' << ratios.size() << ',' << errors[key]
              << ',' << okp::format_double(mean) << ',' << okp::format_double(mx) << '\n';
        }
      }
      std::cout << rep_out.string() << "\n";
      return kOk;
    }
  } catch (const okp::InfeasibilityError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kInvariant;
  } catch (const okp::DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kData;
  } catch (const okp::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kData;
  }
  return kOk;
}
