// Offline ground truth: the fractional optimum, the critical value (v̂, ω̂),
// and an exact integral optimum for small instances.
#pragma once

#include <cstddef>

#include "okp/core.hpp"

namespace okp {

struct CriticalInfo {
  double vhat = 0.0;      // smallest unit value the offline optimum admits
  double omegahat = 0.0;  // total weight at exactly vhat, uncapped
  double opt_profit = 0.0;
};

/// Greedy by descending unit value (ties: earlier arrival first).
Solution fractional_opt(const Instance& instance);

/// When the total weight is below 1 the instance is padded with a virtual
/// (value 0, weight 1) item, so vhat = 0 and omegahat >= 1 in that case.
CriticalInfo critical_value(const Instance& instance);

enum class IntegralMethod {
  Enumeration,  // exact subset search, n <= kMaxEnumerationItems
  GridDP,       // exact DP when every weight is a multiple of 1/grid
};

inline constexpr std::size_t kMaxEnumerationItems = 30;

/// Exact optimal 0/1 knapsack profit under total weight <= 1.
/// For GridDP, `grid` is the capacity denominator (weights must be k/grid).
double integral_opt_bruteforce(const Instance& instance,
                               IntegralMethod method = IntegralMethod::Enumeration,
                               std::size_t grid = 0);

}  // namespace okp
