#include "okp/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "okp/format.hpp"

namespace okp {
namespace {

double log_ratio_plus_one(double lower, double upper) { return 1.0 + std::log(upper / lower); }

void check_range(double lower, double upper) {
  if (!(lower > 0.0) || !std::isfinite(upper) || lower > upper) {
    throw std::domain_error("threshold range requires 0 < L <= U, got [" +
                            format_double(lower) + ", " + format_double(upper) + "]");
  }
}

bool below(double v, double vhat) { return v < vhat && !values_equal(v, vhat); }
bool above(double v, double vhat) { return v > vhat && !values_equal(v, vhat); }

// Keeps a machine inside its own capacity-1 knapsack.
double clamp_to_room(double x, double used) { return std::clamp(x, 0.0, std::max(0.0, 1.0 - used)); }

}  // namespace

double ta_threshold(double z, double lower, double upper) {
  check_range(lower, upper);
  if (!(z >= 0.0 && z <= 1.0)) {
    throw std::domain_error("utilization must lie in [0, 1], got " + format_double(z));
  }
  const double a = log_ratio_plus_one(lower, upper);
  if (z < 1.0 / a) return lower;
  return lower * std::exp(a * z - 1.0);
}

double ta_threshold_inverse(double value, double lower, double upper) {
  check_range(lower, upper);
  if (value < lower) return 0.0;
  if (value >= upper) return 1.0;
  return std::min(1.0, log_ratio_plus_one(lower, value) / log_ratio_plus_one(lower, upper));
}

ThresholdAlgorithm::ThresholdAlgorithm(double lower, double upper)
    : lower_(lower), upper_(upper) {
  check_range(lower, upper);
}

double ThresholdAlgorithm::competitive_ratio() const noexcept {
  return log_ratio_plus_one(lower_, upper_);
}

double ThresholdAlgorithm::step(const Item& item) {
  const double z = std::min(z_, 1.0);
  if (item.value < ta_threshold(z, lower_, upper_)) return 0.0;
  const double target = ta_threshold_inverse(item.value, lower_, upper_);
  const double x = std::min({item.weight, std::max(0.0, target - z_), std::max(0.0, 1.0 - z_)});
  z_ += x;
  return x;
}

NaivePointAlgorithm::NaivePointAlgorithm(double vhat, bool strict) : vhat_(vhat), strict_(strict) {}

double NaivePointAlgorithm::step(const Item& item) {
  const bool accept = strict_ ? above(item.value, vhat_) : !below(item.value, vhat_);
  if (!accept) return 0.0;
  const double x = clamp_to_room(item.weight, used_);
  used_ += x;
  return x;
}

BasicPointAlgorithm::BasicPointAlgorithm(double vhat) : vhat_(vhat) {}

double BasicPointAlgorithm::step(const Item& item) {
  double x = 0.0;
  if (above(item.value, vhat_)) {
    x = item.weight / 2.0;
  } else if (!below(item.value, vhat_)) {
    const double temp = std::max(0.0, std::min(item.weight, 1.0 - omega_));
    omega_ += temp;
    x = temp / 2.0;
  }
  x = clamp_to_room(x, used_);
  used_ += x;
  return x;
}

PrebuyPointAlgorithm::PrebuyPointAlgorithm(double vhat) { state_.vhat = vhat; }

double PrebuyPointAlgorithm::step(const Item& item) {
  auto& st = state_;
  double x = 0.0;
  if (above(item.value, st.vhat)) {
    x = item.weight / (1.0 + st.omega);
    st.tilde_omega += item.weight;
    st.value_above += item.weight * item.value;
  } else if (!below(item.value, st.vhat)) {
    const double m = std::max(0.0, std::min(item.weight, 1.0 - st.omega));
    st.omega += m;
    x = m / (1.0 + st.omega) * (1.0 - st.s);
  }
  x = clamp_to_room(x, st.s);
  st.s += x;
  st.profit += x * item.value;
  return x;
}

IntervalAlgorithm::IntervalAlgorithm(double lo, double hi, std::unique_ptr<OnlineAlgorithm> inner,
                                     double alpha)
    : lo_(lo), hi_(hi), inner_(std::move(inner)), alpha_(alpha) {
  if (!(lo >= 0.0) || lo > hi) throw ConfigError("interval algorithm requires lo <= hi");
  if (!inner_) throw ConfigError("interval algorithm requires a sub-algorithm");
  if (!(alpha >= 1.0)) throw ConfigError("sub-algorithm ratio alpha must be >= 1");
}

IntervalAlgorithm::IntervalAlgorithm(double lo, double hi)
    : IntervalAlgorithm(lo, hi, std::make_unique<ThresholdAlgorithm>(lo, hi),
                        lo > 0.0 && lo <= hi ? log_ratio_plus_one(lo, hi) : 1.0) {}

double IntervalAlgorithm::step(const Item& item) {
  double x = 0.0;
  if (below(item.value, lo_)) {
    x = 0.0;
  } else if (above(item.value, hi_)) {
    x = item.weight / (alpha_ + 1.0);
  } else {
    x = alpha_ / (alpha_ + 1.0) * inner_->step(item);
  }
  x = clamp_to_room(x, used_);
  used_ += x;
  return x;
}

MixingAlgorithm::MixingAlgorithm(double lambda, std::unique_ptr<OnlineAlgorithm> predictive,
                                 double lower, double upper)
    : lambda_(lambda), predictive_(std::move(predictive)), robust_(lower, upper) {
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw ConfigError("trust parameter lambda must lie in (0, 1), got " + format_double(lambda));
  }
  if (!predictive_) throw ConfigError("mixing algorithm requires a prediction algorithm");
}

std::string MixingAlgorithm::name() const {
  return "ma:" + format_double(lambda_) + ":" + predictive_->name();
}

double MixingAlgorithm::step(const Item& item) {
  last_predictive_ = predictive_->step(item);
  last_robust_ = robust_.step(item);
  const double x = std::min(item.weight,
                            lambda_ * last_predictive_ + (1.0 - lambda_) * last_robust_);
  used_ += x;
  return x;
}

}  // namespace okp
