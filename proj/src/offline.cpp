#include "okp/offline.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace okp {
namespace {

// Indices sorted by value descending, ties broken by arrival index.
std::vector<std::size_t> by_value_desc(const Instance& instance) {
  std::vector<std::size_t> order(instance.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return instance[a].value > instance[b].value;
  });
  return order;
}

struct BranchAndBound {
  std::vector<Item> items;  // sorted by value descending
  double best = 0.0;

  // Fractional fill of items[k..] into `room`: an upper bound on what is left.
  double bound(std::size_t k, double room) const {
    double extra = 0.0;
    for (; k < items.size() && room > 0.0; ++k) {
      const double take = std::min(room, items[k].weight);
      extra += take * items[k].value;
      room -= take;
    }
    return extra;
  }

  void search(std::size_t k, double room, double profit) {
    best = std::max(best, profit);
    if (k == items.size()) return;
    if (profit + bound(k, room) <= best * (1.0 + 1e-15)) return;
    const Item& it = items[k];
    if (it.weight <= room + 1e-12) search(k + 1, room - it.weight, profit + it.weight * it.value);
    search(k + 1, room, profit);
  }
};

double grid_dp(const Instance& instance, std::size_t grid) {
  if (grid == 0) throw ConfigError("grid DP requires a positive grid denominator");
  std::vector<double> best(grid + 1, 0.0);
  for (const auto& it : instance.items()) {
    const double units = it.weight * static_cast<double>(grid);
    const auto k = static_cast<long long>(std::llround(units));
    if (std::fabs(units - static_cast<double>(k)) > 1e-9 * std::max(1.0, units)) {
      throw ConfigError("weight " + std::to_string(it.weight) + " is not on the 1/" +
                        std::to_string(grid) + " grid");
    }
    if (k <= 0 || static_cast<std::size_t>(k) > grid) continue;
    const double gain = it.weight * it.value;
    for (std::size_t c = grid; c >= static_cast<std::size_t>(k); --c) {
      best[c] = std::max(best[c], best[c - static_cast<std::size_t>(k)] + gain);
    }
  }
  return best[grid];
}

}  // namespace

Solution fractional_opt(const Instance& instance) {
  std::vector<double> x(instance.size(), 0.0);
  double room = 1.0;
  for (std::size_t i : by_value_desc(instance)) {
    if (room <= 0.0) break;
    const double take = std::min(room, instance[i].weight);
    x[i] = take;
    room -= take;
  }
  return Solution::from_decisions(instance, std::move(x), Mode::Fractional);
}

CriticalInfo critical_value(const Instance& instance) {
  CriticalInfo info;
  info.opt_profit = fractional_opt(instance).profit;

  const auto order = by_value_desc(instance);
  double above = 0.0;  // weight strictly above the current group
  bool found = false;
  for (std::size_t k = 0; k < order.size();) {
    const double v = instance[order[k]].value;
    double group = 0.0;
    std::size_t end = k;
    while (end < order.size() && values_equal(instance[order[end]].value, v)) {
      group += instance[order[end]].weight;
      ++end;
    }
    if (above >= 1.0) break;
    info.vhat = v;
    info.omegahat = group;
    found = true;
    above += group;
    k = end;
  }
  // Total weight below capacity: the padding item (0, 1) becomes critical.
  if (!found || above < 1.0) {
    const bool zero_group = found && info.vhat == 0.0;
    info.omegahat = 1.0 + (zero_group ? info.omegahat : 0.0);
    info.vhat = 0.0;
  }
  return info;
}

double integral_opt_bruteforce(const Instance& instance, IntegralMethod method,
                               std::size_t grid) {
  if (method == IntegralMethod::GridDP) return grid_dp(instance, grid);
  if (instance.size() > kMaxEnumerationItems) {
    throw ConfigError("subset enumeration is limited to " +
                      std::to_string(kMaxEnumerationItems) + " items, got " +
                      std::to_string(instance.size()));
  }
  BranchAndBound bb;
  for (std::size_t i : by_value_desc(instance)) bb.items.push_back(instance[i]);
  bb.search(0, 1.0, 0.0);
  return bb.best;
}

}  // namespace okp
