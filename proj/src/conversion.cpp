#include "okp/conversion.hpp"

#include <cmath>
#include <stdexcept>

#include "okp/format.hpp"

namespace okp {
namespace {

// ceil(log_{1+delta}(ratio)) with boundary snapping.
std::size_t snapped_ceil_log(double ratio, double delta) {
  const double r = std::log(ratio) / std::log1p(delta);
  const double nearest = std::round(r);
  if (nearest >= 0.0 &&
      std::fabs(std::pow(1.0 + delta, nearest) - ratio) <= 1e-12 * ratio) {
    return static_cast<std::size_t>(nearest);
  }
  return static_cast<std::size_t>(std::max(0.0, std::ceil(r)));
}

}  // namespace

ValuePartition::ValuePartition(double delta, double lower, double upper)
    : delta_(delta), lower_(lower), upper_(upper) {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw ConfigError("partition delta must be positive, got " + format_double(delta));
  }
  if (!(lower > 0.0) || !std::isfinite(upper) || lower > upper) {
    throw ConfigError("partition requires 0 < L <= U");
  }
  k_ = snapped_ceil_log(upper / lower, delta);
}

std::size_t ValuePartition::bucket_index(double value) const {
  const bool low = value < lower_ && !values_equal(value, lower_);
  const bool high = value > upper_ && !values_equal(value, upper_);
  if (low || high || !std::isfinite(value)) {
    throw std::domain_error("value " + format_double(value) + " outside partition range [" +
                            format_double(lower_) + ", " + format_double(upper_) + "]");
  }
  if (value <= lower_) return 0;
  return std::min(snapped_ceil_log(value / lower_, delta_), k_);
}

ConversionAlgorithm::ConversionAlgorithm(std::unique_ptr<OnlineAlgorithm> inner, double delta,
                                         double epsilon, double lower, double upper)
    : inner_(std::move(inner)), partition_(delta, lower, upper), epsilon_(epsilon) {
  if (!inner_) throw ConfigError("conversion requires an inner fractional algorithm");
  const double buckets = static_cast<double>(partition_.bucket_count());
  if (!(epsilon > 0.0) || !(epsilon * buckets < 1.0)) {
    throw ConfigError("conversion requires 0 < epsilon < 1/(K+1) = " +
                      format_double(1.0 / buckets) + ", got " + format_double(epsilon));
  }
  scale_ = (1.0 - epsilon * buckets) / (1.0 + delta);
  accepted_.assign(partition_.bucket_count(), 0.0);
  simulated_.assign(partition_.bucket_count(), 0.0);
}

std::string ConversionAlgorithm::name() const {
  return "conv:" + inner_->name() + ":" + format_double(partition_.delta()) + ":" +
         format_double(epsilon_);
}

double ConversionAlgorithm::step(const Item& item) {
  if (item.weight > epsilon_ * (1.0 + 1e-12)) {
    throw DataError("conversion: item weight " + format_double(item.weight) +
                    " exceeds epsilon " + format_double(epsilon_));
  }
  const double fractional = inner_->step(item);
  const std::size_t j = partition_.bucket_index(item.value);
  simulated_[j] += fractional * item.value;
  if (!(accepted_[j] < simulated_[j] * scale_)) return 0.0;
  if (used_ + item.weight > 1.0) {
    ++capacity_rejections_;
    return 0.0;
  }
  accepted_[j] += item.weight * item.value;
  used_ += item.weight;
  return item.weight;
}

}  // namespace okp
