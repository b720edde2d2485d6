// Fractional-to-integral conversion by value partitioning.
//
// [L, U] is cut into multiplicative (1 + delta) buckets. Conv simulates a
// fractional algorithm and accepts a whole item whenever the integral value
// already banked in the item's bucket falls behind the simulated fractional
// value scaled by (1 - eps (K + 1)) / (1 + delta).
#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "okp/core.hpp"

namespace okp {

class ValuePartition {
 public:
  ValuePartition(double delta, double lower, double upper);

  double delta() const noexcept { return delta_; }
  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }
  /// K = ceil(log_{1+delta}(U/L)); buckets are indexed 0..K.
  std::size_t k() const noexcept { return k_; }
  std::size_t bucket_count() const noexcept { return k_ + 1; }

  /// ceil(log_{1+delta}(v/L)), snapping values within 1e-12 (relative) of a
  /// boundary L(1+delta)^k onto bucket k. Throws std::domain_error outside [L, U].
  std::size_t bucket_index(double value) const;

 private:
  double delta_;
  double lower_;
  double upper_;
  std::size_t k_;
};

class ConversionAlgorithm final : public OnlineAlgorithm {
 public:
  /// Throws ConfigError unless epsilon < 1 / (K + 1).
  ConversionAlgorithm(std::unique_ptr<OnlineAlgorithm> inner, double delta, double epsilon,
                      double lower, double upper);

  /// Throws DataError for items heavier than epsilon.
  double step(const Item& item) override;
  double utilization() const noexcept override { return used_; }
  Mode mode() const noexcept override { return Mode::Integral; }
  std::string name() const override;

  const ValuePartition& partition() const noexcept { return partition_; }
  double epsilon() const noexcept { return epsilon_; }
  /// (1 - eps (K + 1)) / (1 + delta).
  double scale() const noexcept { return scale_; }
  /// Competitive-ratio loss factor (1 + delta) / (1 - eps (K + 1)).
  double loss_factor() const noexcept { return 1.0 / scale_; }

  const std::vector<double>& accepted_value() const noexcept { return accepted_; }
  const std::vector<double>& simulated_value() const noexcept { return simulated_; }
  const OnlineAlgorithm& inner() const noexcept { return *inner_; }
  /// Items the bucket rule wanted but which no longer fit in the knapsack.
  std::size_t capacity_rejections() const noexcept { return capacity_rejections_; }

 private:
  std::unique_ptr<OnlineAlgorithm> inner_;
  ValuePartition partition_;
  double epsilon_;
  double scale_;
  std::vector<double> accepted_;   // A[j]
  std::vector<double> simulated_;  // R[j]
  double used_ = 0.0;
  std::size_t capacity_rejections_ = 0;
};

}  // namespace okp
