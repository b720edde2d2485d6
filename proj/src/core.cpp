#include "okp/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "okp/format.hpp"

namespace okp {

bool values_equal(double a, double b) noexcept {
  const double scale = std::max(std::fabs(a), std::fabs(b));
  return std::fabs(a - b) <= std::max(kValueAbsTol, kValueRelTol * scale);
}

Instance::Instance(std::vector<Item> items, std::optional<Bounds> bounds)
    : items_(std::move(items)), bounds_(bounds) {
  if (bounds_) {
    const auto [lo, hi] = *bounds_;
    if (!(lo > 0.0) || !std::isfinite(hi) || lo > hi) {
      throw DataError("instance bounds must satisfy 0 < L <= U, got [" + format_double(lo) +
                      ", " + format_double(hi) + "]");
    }
  }
  for (std::size_t i = 0; i < items_.size(); ++i) {
    const auto& it = items_[i];
    if (!std::isfinite(it.weight) || !(it.weight > 0.0)) {
      throw DataError("item " + std::to_string(i) + ": weight must be positive, got " +
                      format_double(it.weight));
    }
    if (!std::isfinite(it.value) || it.value < 0.0) {
      throw DataError("item " + std::to_string(i) + ": value must be non-negative, got " +
                      format_double(it.value));
    }
    if (bounds_ && it.value > 0.0) {
      const bool below = it.value < bounds_->lower && !values_equal(it.value, bounds_->lower);
      const bool above = it.value > bounds_->upper && !values_equal(it.value, bounds_->upper);
      if (below || above) {
        throw DataError("item " + std::to_string(i) + ": value " + format_double(it.value) +
                        " outside bounds [" + format_double(bounds_->lower) + ", " +
                        format_double(bounds_->upper) + "]");
      }
    }
  }
}

double Instance::total_weight() const noexcept {
  double sum = 0.0;
  for (const auto& it : items_) sum += it.weight;
  return sum;
}

Instance Instance::prefix(std::size_t k) const {
  k = std::min(k, items_.size());
  return Instance(std::vector<Item>(items_.begin(), items_.begin() + static_cast<long>(k)),
                  bounds_);
}

Instance Instance::with_bounds(std::optional<Bounds> bounds) const {
  return Instance(items_, bounds);
}

Prediction Prediction::point(double vhat) {
  if (!std::isfinite(vhat) || vhat < 0.0) {
    throw ConfigError("point prediction must be a non-negative finite value");
  }
  return Prediction(PointPrediction{vhat});
}

Prediction Prediction::interval(double lo, double hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo < 0.0 || lo > hi) {
    throw ConfigError("interval prediction requires 0 <= lo <= hi");
  }
  return Prediction(IntervalPrediction{lo, hi});
}

const PointPrediction& Prediction::as_point() const {
  if (!is_point()) throw ConfigError("expected a point prediction, got " + to_string());
  return std::get<PointPrediction>(v_);
}

const IntervalPrediction& Prediction::as_interval() const {
  if (!is_interval()) throw ConfigError("expected an interval prediction, got " + to_string());
  return std::get<IntervalPrediction>(v_);
}

bool Prediction::contains(double vhat) const noexcept {
  if (const auto* p = std::get_if<PointPrediction>(&v_)) return values_equal(p->vhat, vhat);
  const auto& iv = std::get<IntervalPrediction>(v_);
  return (iv.lo <= vhat || values_equal(iv.lo, vhat)) &&
         (vhat <= iv.hi || values_equal(iv.hi, vhat));
}

std::string Prediction::to_string() const {
  if (const auto* p = std::get_if<PointPrediction>(&v_)) {
    return "point:" + format_double(p->vhat);
  }
  const auto& iv = std::get<IntervalPrediction>(v_);
  return "interval:" + format_double(iv.lo) + ":" + format_double(iv.hi);
}

Solution Solution::from_decisions(const Instance& instance, std::vector<double> decisions,
                                  Mode mode) {
  Solution s;
  s.mode = mode;
  for (std::size_t i = 0; i < decisions.size(); ++i) {
    s.profit += decisions[i] * instance[i].value;
    s.utilization += decisions[i];
  }
  s.decisions = std::move(decisions);
  return s;
}

void validate_solution(const Instance& instance, const Solution& s) {
  if (s.decisions.size() != instance.size()) {
    throw InfeasibilityError("solution length does not match instance length");
  }
  double util = 0.0;
  double profit = 0.0;
  for (std::size_t i = 0; i < s.decisions.size(); ++i) {
    const double x = s.decisions[i];
    const double w = instance[i].weight;
    if (x < 0.0 || x > w * (1.0 + 1e-12)) {
      throw InfeasibilityError("decision " + std::to_string(i) + " = " + format_double(x) +
                               " outside [0, " + format_double(w) + "]");
    }
    if (s.mode == Mode::Integral && x != 0.0 && x != w) {
      throw InfeasibilityError("integral decision " + std::to_string(i) + " is fractional");
    }
    util += x;
    profit += x * instance[i].value;
  }
  if (util > 1.0 + kFeasibilityTol) {
    throw InfeasibilityError("utilization " + format_double(util) + " exceeds capacity");
  }
  if (std::fabs(profit - s.profit) > 1e-9 * std::max(1.0, std::fabs(profit))) {
    throw InfeasibilityError("profit does not match decisions");
  }
}

Solution run_online(OnlineAlgorithm& alg, const Instance& instance) {
  std::vector<double> decisions;
  decisions.reserve(instance.size());
  double used = 0.0;
  for (std::size_t i = 0; i < instance.size(); ++i) {
    const Item& item = instance[i];
    const double x = alg.step(item);
    if (!(x >= 0.0) || x > item.weight * (1.0 + 1e-12) + 1e-15) {
      throw InfeasibilityError(alg.name() + ": step " + std::to_string(i) + " accepted " +
                               format_double(x) + " of an item with weight " +
                               format_double(item.weight));
    }
    used += x;
    if (used > 1.0 + kFeasibilityTol) {
      throw InfeasibilityError(alg.name() + ": capacity exceeded at step " +
                               std::to_string(i) + " (utilization " + format_double(used) +
                               ")");
    }
    decisions.push_back(x);
  }
  return Solution::from_decisions(instance, std::move(decisions), alg.mode());
}

}  // namespace okp
