// Experiment driver: (instance x algorithm x prediction) grids, empirical
// competitive ratios and CDF tables.
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "okp/core.hpp"
#include "okp/instgen.hpp"

namespace okp {

/// OPT / ALG, with OPT = 0 -> 1 and ALG = 0 < OPT -> +infinity.
double empirical_cr(double alg_profit, double opt_profit);

struct RunRecord {
  std::string instance_id;
  std::string algorithm;
  std::string prediction;  // prediction spec, e.g. "exact" or "width:15"
  std::string predicted;   // realized prediction, e.g. "point:3.5"
  double profit = 0.0;
  double opt_profit = 0.0;
  double ratio = 1.0;
  double utilization = 0.0;
  double vhat = 0.0;
  double omegahat = 0.0;
  std::string error;  // non-empty for a failed cell

  bool ok() const noexcept { return error.empty(); }
};

struct NamedInstance {
  std::string id;
  Instance instance;
};

struct SweepConfig {
  std::vector<std::filesystem::path> instance_paths;
  std::optional<GenSpec> generator;
  std::size_t generate_count = 0;
  std::vector<std::string> algorithms;
  std::vector<std::string> predictions{"exact"};
  std::uint64_t seed = 0;  // base seed for randomized predictions
  std::size_t parallelism = 1;
  std::filesystem::path output_dir;

  /// Flat `key = value` lines; arrays comma-separated. Keys: instances,
  /// generate.kind, generate.count, generate.seed, generate.<param>,
  /// algorithms, predictions, seed, parallelism, out.
  static SweepConfig parse(std::string_view text);
  static SweepConfig from_file(const std::filesystem::path& path);
  void validate() const;
};

/// Seed for element `index` of a seeded collection.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

/// Instances named by the config: files first, then generated ones.
std::vector<NamedInstance> load_instances(const SweepConfig& config);

/// One cell. Failures become error records rather than exceptions, except
/// InfeasibilityError which signals a bug and propagates.
RunRecord run_cell(const NamedInstance& instance, const std::string& algorithm,
                   const std::string& prediction, std::uint64_t prediction_seed);

/// Records ordered by (instance, algorithm, prediction) regardless of
/// `parallelism`. Instance k uses prediction seed substream_seed(seed, k).
std::vector<RunRecord> run_grid(const std::vector<NamedInstance>& instances,
                                const std::vector<std::string>& algorithms,
                                const std::vector<std::string>& predictions, std::uint64_t seed,
                                std::size_t parallelism = 1);

/// load_instances + run_grid; writes <out>/runs.csv when output_dir is set.
std::vector<RunRecord> run_sweep(const SweepConfig& config);

void write_records_csv(const std::filesystem::path& path, std::span<const RunRecord> records);
std::vector<RunRecord> read_records_csv(const std::filesystem::path& path);

struct CdfPoint {
  double ratio;
  double fraction;
};

/// Distinct sorted ratios with cumulative fraction; +inf sorts last.
std::vector<CdfPoint> cdf(std::span<const double> ratios);

}  // namespace okp
