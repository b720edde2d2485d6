// Fractional online knapsack algorithms as step-wise state machines.
//
//   ThresholdAlgorithm   - TA, (1 + ln(U/L))-competitive without predictions
//   NaivePointAlgorithm  - PP-n, greedy above the predicted critical value
//   BasicPointAlgorithm  - PP-b, half/half split around the prediction
//   PrebuyPointAlgorithm - PP-a, prebuys above v̂ and compensates at v̂
//   IntervalAlgorithm    - IPA, wraps a robust sub-algorithm on [lo, hi]
//   MixingAlgorithm      - MA, lambda-mix of a prediction algorithm and TA
//
// Every machine owns a virtual knapsack of capacity 1. The prediction-based
// rules clamp to their remaining capacity, which is a no-op whenever the
// prediction is correct.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "okp/core.hpp"

namespace okp {

/// Threshold φ(z) of TA on [L, U].
double ta_threshold(double z, double lower, double upper);

/// Largest utilization z with φ(z) <= value, clamped to [0, 1].
double ta_threshold_inverse(double value, double lower, double upper);

class ThresholdAlgorithm final : public OnlineAlgorithm {
 public:
  ThresholdAlgorithm(double lower, double upper);

  double step(const Item& item) override;
  double utilization() const noexcept override { return z_; }
  std::string name() const override { return "ta"; }

  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }
  /// 1 + ln(U/L).
  double competitive_ratio() const noexcept;

 private:
  double lower_;
  double upper_;
  double z_ = 0.0;
};

class NaivePointAlgorithm final : public OnlineAlgorithm {
 public:
  /// With `strict`, items at exactly v̂ are rejected (the non-competitive variant).
  explicit NaivePointAlgorithm(double vhat, bool strict = false);

  double step(const Item& item) override;
  double utilization() const noexcept override { return used_; }
  std::string name() const override { return strict_ ? "ppn-strict" : "ppn"; }

 private:
  double vhat_;
  bool strict_;
  double used_ = 0.0;
};

class BasicPointAlgorithm final : public OnlineAlgorithm {
 public:
  explicit BasicPointAlgorithm(double vhat);

  double step(const Item& item) override;
  double utilization() const noexcept override { return used_; }
  std::string name() const override { return "ppb"; }

  /// Weight seen so far at the predicted value, capped at 1.
  double omega() const noexcept { return omega_; }

 private:
  double vhat_;
  double omega_ = 0.0;
  double used_ = 0.0;
};

struct PrebuyState {
  double vhat = 0.0;
  double omega = 0.0;        // running ω̂_i, capped at 1
  double s = 0.0;            // cumulative acceptance s_i
  double tilde_omega = 0.0;  // cumulative weight seen strictly above v̂
  double value_above = 0.0;  // Σ w_j v_j over items strictly above v̂
  double profit = 0.0;
};

class PrebuyPointAlgorithm final : public OnlineAlgorithm {
 public:
  explicit PrebuyPointAlgorithm(double vhat);

  double step(const Item& item) override;
  double utilization() const noexcept override { return state_.s; }
  std::string name() const override { return "ppa"; }

  const PrebuyState& state() const noexcept { return state_; }

 private:
  PrebuyState state_;
};

class IntervalAlgorithm final : public OnlineAlgorithm {
 public:
  /// `inner` runs on its own capacity-1 knapsack over values in [lo, hi] and
  /// must be `alpha`-competitive there.
  IntervalAlgorithm(double lo, double hi, std::unique_ptr<OnlineAlgorithm> inner, double alpha);
  /// Default sub-algorithm: TA on [lo, hi] with alpha = 1 + ln(hi/lo).
  IntervalAlgorithm(double lo, double hi);

  double step(const Item& item) override;
  double utilization() const noexcept override { return used_; }
  std::string name() const override { return "ipa"; }

  double alpha() const noexcept { return alpha_; }
  const OnlineAlgorithm& inner() const noexcept { return *inner_; }

 private:
  double lo_;
  double hi_;
  std::unique_ptr<OnlineAlgorithm> inner_;
  double alpha_;
  double used_ = 0.0;
};

class MixingAlgorithm final : public OnlineAlgorithm {
 public:
  MixingAlgorithm(double lambda, std::unique_ptr<OnlineAlgorithm> predictive, double lower,
                  double upper);

  double step(const Item& item) override;
  double utilization() const noexcept override { return used_; }
  std::string name() const override;

  double lambda() const noexcept { return lambda_; }
  const OnlineAlgorithm& predictive() const noexcept { return *predictive_; }
  const ThresholdAlgorithm& robust() const noexcept { return robust_; }
  /// Decisions of the two nested machines at the most recent step.
  double last_predictive() const noexcept { return last_predictive_; }
  double last_robust() const noexcept { return last_robust_; }

 private:
  double lambda_;
  std::unique_ptr<OnlineAlgorithm> predictive_;
  ThresholdAlgorithm robust_;
  double used_ = 0.0;
  double last_predictive_ = 0.0;
  double last_robust_ = 0.0;
};

/// Builds a fresh machine from a CLI algorithm-spec string:
///   ta | ppn | ppn-strict | ppb | ppa | ipa | ma:<lambda>:<ppa|ipa>
///   conv:<inner-spec>:<delta>:<epsilon>
/// `bounds` falls back to the instance bounds when TA, MA or Conv need them.
/// Throws ConfigError when a required prediction or bound is missing.
std::unique_ptr<OnlineAlgorithm> make_algorithm(std::string_view spec,
                                                const std::optional<Prediction>& prediction,
                                                const std::optional<Bounds>& bounds);

/// Parses `spec`, builds the machine and runs it over `instance`.
Solution online_run(std::string_view spec, const Instance& instance,
                    const std::optional<Prediction>& prediction = std::nullopt);

}  // namespace okp
