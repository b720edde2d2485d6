// Builds instances from external price series and job-duration traces.
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <utility>
#include <vector>

#include "okp/core.hpp"

namespace okp {

struct IngestSpec {
  enum class Source { PriceSeries, DurationTrace };

  Source source = Source::PriceSeries;
  std::size_t sample_n = 10000;
  double item_weight = 0.001;
  std::pair<double, double> duration_scale_range{1.0, 250.0};
  std::vector<double> resource_factors{0.01, 0.03, 0.05};
  std::uint64_t seed = 0;
  /// Overrides the bounds otherwise taken from the sampled values.
  std::optional<Bounds> bounds;

  void validate() const;
};

/// Reads the named numeric column. The header row is required; other columns
/// are ignored. Throws DataError (with the 1-based line number) on bad rows.
std::vector<double> read_numeric_column(const std::filesystem::path& path,
                                        std::string_view column);

/// Samples `sample_n` prices (without replacement when the file has enough
/// rows); each becomes an item (price, item_weight).
Instance load_price_series(const std::filesystem::path& path, const IngestSpec& spec);
Instance price_series_instance(const std::vector<double>& prices, const IngestSpec& spec);

/// value = duration * uniform(scale range) * choice(resource_factors).
Instance load_duration_trace(const std::filesystem::path& path, const IngestSpec& spec);
Instance duration_trace_instance(const std::vector<double>& durations, const IngestSpec& spec);

}  // namespace okp
