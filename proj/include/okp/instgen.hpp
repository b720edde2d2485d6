// Seeded synthetic instances, the adversarial constructions from the
// lower-bound arguments, and prediction builders.
#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "okp/core.hpp"

namespace okp {

struct PowerLawParams {
  std::size_t n = 1000;
  double lower = 1.0;
  double upper = 1000.0;
  double value_exponent = 2.0;   // Pareto tail index of unit values on [L, U]
  double weight_exponent = 2.0;  // Pareto tail index of raw weights on [1, inf)
  double weight_scale = 0.05;    // largest weight after normalization
};

/// Inverse CDF of the bounded Pareto distribution with tail index `shape` on
/// [lower, upper], evaluated at u in [0, 1).
double bounded_pareto_quantile(double u, double lower, double upper, double shape);

/// Values ~ bounded Pareto on [L, U]; weights ~ Pareto, divided by
/// (max weight / weight_scale). Bounds are set to [L, U].
Instance gen_powerlaw(const PowerLawParams& params, std::uint64_t seed);

/// Power-law instance reshaped so that its critical value carries total
/// weight exactly `omegahat` (in (0, 1)); the weight strictly above the
/// critical value is 1 - omegahat / 2.
Instance gen_omega_powerlaw(const PowerLawParams& params, double omegahat, std::uint64_t seed);

/// I1 = [(1, ω̂)], I2 = [(1, ω̂), (U, 1 - ε)]; both with critical value 1.
std::pair<Instance, Instance> gen_spike_pair(double omegahat, double upper, double epsilon);

/// I = non-decreasing batches from lo to hi (`batches` steps, m items each),
/// J = I followed by (U, 1 - ε). `batches` = 0 means `m`.
std::pair<Instance, Instance> gen_interval_lb(double lo, double hi, double upper, std::size_t m,
                                              double epsilon, std::size_t batches = 0);

struct ThreeBatch {
  Instance first;      // m items (L, 1/m)
  Instance first_two;  // + (m - 1) items (A L, 1/m)
  Instance full;       // + 2m items (B L, 1/m)
};

ThreeBatch gen_three_batch(double lower, double a, double b, double upper, std::size_t m);

/// N_x = ceil((x - L)/δ) + 1 batches, δ = (U - L)/N; batch i has m items of
/// value L + (i - 1) δ and weight 1/m.
Instance gen_x_nondecreasing(double x, double lower, double upper, std::size_t batches,
                             std::size_t m);

/// Bounded values only: I1 = [(1, 2κ)], I2 = [(1, 2κ), (U, 1 - κ)].
std::pair<Instance, Instance> gen_integral_lb_bounded(double kappa, double upper);

/// Small weights only: base of 1/κ items (v̂, κ); instance i (1-based, up to
/// `count`) appends i - 1 items where the k-th has value c (c+1)^(k-1) v̂ / κ.
std::vector<Instance> gen_integral_lb_smallweight(double kappa, double c, double vhat,
                                                  std::size_t count);

/// Kind + parameters + seed, as used by `okp generate`.
struct GenSpec {
  std::string kind;
  std::map<std::string, double> params;
  std::uint64_t seed = 0;

  double get(const std::string& key, double fallback) const;
};

struct LabeledInstance {
  std::string label;
  Instance instance;
};

/// Kinds: powerlaw, omega-powerlaw, spike-pair, interval-lb, three-batch,
/// x-nondecreasing, integral-lb (param `variant`: 0 bounded-only, 1 smallweight-only).
std::vector<LabeledInstance> generate(const GenSpec& spec);

// ---------------------------------------------------------------- predictions

struct PredictionSpec {
  enum class Kind { None, Exact, PointFixed, IntervalWidth, IntervalFixed, Untrusted };
  enum class ErrorModel { Point, Interval };

  Kind kind = Kind::Exact;
  double a = 0.0;  // point value, width percent, or interval lo
  double b = 0.0;  // interval hi
  double delta = 0.0;  // probability that an untrusted prediction is wrong
  ErrorModel error_model = ErrorModel::Point;
  double width_pct = 0.0;  // interval width for untrusted interval predictions

  /// none | exact | point:<v> | width:<pct> | interval:<lo>:<hi> |
  /// untrusted:<delta>:point | untrusted:<delta>:width:<pct>
  static PredictionSpec parse(std::string_view text);
  std::string to_string() const;
};

/// Throws DataError on an empty instance.
Prediction make_prediction(const Instance& instance, const PredictionSpec& spec,
                           std::uint64_t seed);

}  // namespace okp
