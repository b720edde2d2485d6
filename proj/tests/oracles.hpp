// Test-side reference implementations, written independently of src/.
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "okp/core.hpp"
#include "okp/random.hpp"

namespace oracle {

inline okp::Instance random_instance(okp::CounterRng& rng, std::size_t n, double lower = 1.0,
                                     double upper = 50.0, double max_weight = 0.6) {
  std::vector<okp::Item> items;
  for (std::size_t i = 0; i < n; ++i) {
    // Coarse values so ties occur.
    double v = lower + std::floor(rng.uniform() * 8.0) * (upper - lower) / 7.0;
    v = std::min(v, upper);
    items.push_back({v, 0.01 + rng.uniform() * (max_weight - 0.01)});
  }
  return okp::Instance(std::move(items), okp::Bounds{lower, upper});
}

// LP duality: max sum v x s.t. sum x <= 1, 0 <= x <= w equals
// min over y >= 0 of y + sum w max(0, v - y), attained at y in {0} U {v_i}.
inline double fractional_lp(const okp::Instance& inst) {
  std::vector<double> cands{0.0};
  for (const auto& it : inst.items()) cands.push_back(it.value);
  double best = std::numeric_limits<double>::infinity();
  for (double y : cands) {
    double obj = y;
    for (const auto& it : inst.items()) obj += it.weight * std::max(0.0, it.value - y);
    best = std::min(best, obj);
  }
  return best;
}

// (vhat, omegahat) by direct O(n^2) scan over candidates.
inline std::pair<double, double> critical(const okp::Instance& inst) {
  std::vector<okp::Item> items(inst.items().begin(), inst.items().end());
  if (inst.total_weight() < 1.0) items.push_back({0.0, 1.0});
  double vhat = std::numeric_limits<double>::infinity();
  for (const auto& c : items) {
    double above = 0.0;
    for (const auto& o : items) {
      if (o.value > c.value) above += o.weight;
    }
    if (above < 1.0) vhat = std::min(vhat, c.value);
  }
  double omega = 0.0;
  for (const auto& o : items) {
    if (o.value == vhat) omega += o.weight;
  }
  return {vhat, omega};
}

inline double subset_enumeration(const okp::Instance& inst) {
  const std::size_t n = inst.size();
  double best = 0.0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    double w = 0.0, p = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        w += inst[i].weight;
        p += inst[i].weight * inst[i].value;
      }
    }
    if (w <= 1.0 + 1e-12) best = std::max(best, p);
  }
  return best;
}

// Threshold rule by bisection on the threshold function itself, with no
// closed-form inverse.
struct ThresholdSim {
  double lower, upper, z = 0.0;

  double phi(double u) const {
    const double a = 1.0 + std::log(upper / lower);
    return u < 1.0 / a ? lower : lower * std::exp(a * u - 1.0);
  }
  double step(const okp::Item& it) {
    if (it.value < phi(z)) return 0.0;
    double lo = z, hi = std::min(1.0, z + it.weight);
    if (phi(hi) <= it.value) {
      const double x = hi - z;
      z = hi;
      return x;
    }
    for (int k = 0; k < 200; ++k) {
      const double mid = 0.5 * (lo + hi);
      (phi(mid) <= it.value ? lo : hi) = mid;
    }
    const double x = lo - z;
    z = lo;
    return x;
  }
};

// Prebuying rule for a point prediction, transcribed step by step.
struct PrebuySim {
  double vhat;
  double omega = 0.0;  // critical-value weight seen so far, capped at 1
  double s = 0.0;
  double above = 0.0;

  double step(const okp::Item& it) {
    double x = 0.0;
    if (okp::values_equal(it.value, vhat)) {
      const double take = std::min(it.weight, 1.0 - omega);
      const double prev_s = s;
      omega += take;
      x = take / (1.0 + omega) - prev_s * take / (1.0 + omega);
    } else if (it.value > vhat) {
      x = it.weight / (1.0 + omega);
      above += it.weight;
    }
    s += x;
    return x;
  }
};

// Basic rule: half of everything above the prediction, half of the first
// unit of weight at the prediction.
struct BasicSim {
  double vhat;
  double at = 0.0;

  double step(const okp::Item& it) {
    if (it.value > vhat && !okp::values_equal(it.value, vhat)) return it.weight / 2.0;
    if (!okp::values_equal(it.value, vhat)) return 0.0;
    const double t = std::min(it.weight, 1.0 - at);
    at += t;
    return t / 2.0;
  }
};

// Mean of the bounded Pareto distribution on [L, U] with tail index a, by
// composite Simpson quadrature in log space.
inline double bounded_pareto_mean(double lower, double upper, double a, int panels = 20000) {
  const double norm = 1.0 - std::pow(lower / upper, a);
  auto f = [&](double t) {  // x = e^t, dx = x dt
    const double x = std::exp(t);
    return x * (a * std::pow(lower, a) * std::pow(x, -a - 1.0) / norm) * x;
  };
  const double t0 = std::log(lower), t1 = std::log(upper);
  const double h = (t1 - t0) / panels;
  double sum = f(t0) + f(t1);
  for (int i = 1; i < panels; ++i) sum += f(t0 + i * h) * (i % 2 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

}  // namespace oracle
