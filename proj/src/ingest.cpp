#include "okp/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <string>

#include "okp/format.hpp"
#include "okp/random.hpp"

namespace okp {
namespace {

std::vector<std::string_view> split_row(std::string_view line) {
  std::vector<std::string_view> cells;
  for (std::size_t start = 0;;) {
    const auto comma = line.find(',', start);
    cells.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

// Row indices to use: a without-replacement sample when possible.
std::vector<std::size_t> sample_rows(std::size_t rows, std::size_t n, CounterRng& rng) {
  std::vector<std::size_t> picked;
  if (n <= rows) {
    std::vector<std::size_t> pool(rows);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    for (std::size_t i = 0; i < n; ++i) {
      const auto j = i + rng.below(rows - i);
      std::swap(pool[i], pool[j]);
    }
    picked.assign(pool.begin(), pool.begin() + static_cast<long>(n));
  } else {
    picked.reserve(n);
    for (std::size_t i = 0; i < n; ++i) picked.push_back(rng.below(rows));
  }
  return picked;
}

Instance finish(std::vector<Item> items, const IngestSpec& spec) {
  if (spec.bounds) return Instance(std::move(items), spec.bounds);
  double lo = items.front().value;
  double hi = lo;
  for (const auto& it : items) {
    lo = std::min(lo, it.value);
    hi = std::max(hi, it.value);
  }
  return Instance(std::move(items), Bounds{lo, hi});
}

}  // namespace

void IngestSpec::validate() const {
  if (sample_n < 1) throw ConfigError("ingest: sample size must be >= 1");
  if (!(item_weight > 0.0 && item_weight <= 1.0)) {
    throw ConfigError("ingest: item weight must be in (0, 1]");
  }
  if (!(duration_scale_range.first > 0.0 &&
        duration_scale_range.first <= duration_scale_range.second)) {
    throw ConfigError("ingest: duration scale range must satisfy 0 < lo <= hi");
  }
  if (source == Source::DurationTrace) {
    if (resource_factors.empty()) throw ConfigError("ingest: resource factors must be non-empty");
    for (double f : resource_factors) {
      if (!(f > 0.0)) throw ConfigError("ingest: resource factors must be positive");
    }
  }
}

std::vector<double> read_numeric_column(const std::filesystem::path& path,
                                        std::string_view column) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  std::string line;
  if (!std::getline(in, line)) throw DataError("'" + path.string() + "' is empty");
  const auto header = split_row(line);
  const auto pos = std::find(header.begin(), header.end(), column);
  if (pos == header.end()) {
    throw DataError("'" + path.string() + "' has no '" + std::string(column) + "' column");
  }
  const auto col = static_cast<std::size_t>(pos - header.begin());

  std::vector<double> out;
  for (std::size_t lineno = 2; std::getline(in, line); ++lineno) {
    if (trim(line).empty()) continue;
    const auto cells = split_row(line);
    if (col >= cells.size()) {
      throw DataError(path.string() + ":" + std::to_string(lineno) + ": missing '" +
                      std::string(column) + "' cell");
    }
    try {
      out.push_back(parse_double(cells[col], column));
    } catch (const DataError& e) {
      throw DataError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (out.empty()) throw DataError("'" + path.string() + "' has no data rows");
  return out;
}

Instance price_series_instance(const std::vector<double>& prices, const IngestSpec& spec) {
  spec.validate();
  if (prices.empty()) throw DataError("price series is empty");
  CounterRng rng(spec.seed);
  std::vector<Item> items;
  items.reserve(spec.sample_n);
  for (std::size_t row : sample_rows(prices.size(), spec.sample_n, rng)) {
    if (!(prices[row] > 0.0)) {
      throw DataError("price on data row " + std::to_string(row + 1) + " is not positive");
    }
    items.push_back({prices[row], spec.item_weight});
  }
  return finish(std::move(items), spec);
}

Instance load_price_series(const std::filesystem::path& path, const IngestSpec& spec) {
  return price_series_instance(read_numeric_column(path, "price"), spec);
}

Instance duration_trace_instance(const std::vector<double>& durations, const IngestSpec& spec) {
  spec.validate();
  if (durations.empty()) throw DataError("duration trace is empty");
  CounterRng rng(spec.seed);
  const auto rows = sample_rows(durations.size(), spec.sample_n, rng);
  std::vector<Item> items;
  items.reserve(rows.size());
  const auto [scale_lo, scale_hi] = spec.duration_scale_range;
  for (std::size_t row : rows) {
    if (!(durations[row] > 0.0)) {
      throw DataError("duration on data row " + std::to_string(row + 1) + " is not positive");
    }
    const double scale = rng.uniform(scale_lo, scale_hi);
    const double factor = spec.resource_factors[rng.below(spec.resource_factors.size())];
    items.push_back({durations[row] * scale * factor, spec.item_weight});
  }
  return finish(std::move(items), spec);
}

Instance load_duration_trace(const std::filesystem::path& path, const IngestSpec& spec) {
  return duration_trace_instance(read_numeric_column(path, "duration"), spec);
}

}  // namespace okp
