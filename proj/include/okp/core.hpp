// Domain types and the online-algorithm contract shared by every module.
//
// Capacity is fixed at 1. An Item carries a *unit* value (profit per unit of
// weight); the profit of accepting x units of an item is x * value.
#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace okp {

/// Absolute slack allowed on the capacity constraint.
inline constexpr double kFeasibilityTol = 1e-9;

/// Relative / absolute tolerance for value-equality tests ("v_i = v̂").
inline constexpr double kValueRelTol = 1e-12;
inline constexpr double kValueAbsTol = 1e-15;

bool values_equal(double a, double b) noexcept;

// Error categories. The CLI maps them onto exit codes 1, 2 and 3.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InfeasibilityError : std::logic_error {
  using std::logic_error::logic_error;
};

struct Item {
  double value = 0.0;
  double weight = 0.0;

  friend bool operator==(const Item&, const Item&) = default;
};

struct Bounds {
  double lower = 0.0;
  double upper = 0.0;

  friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// Ordered arrival sequence with optional value bounds [L, U].
class Instance {
 public:
  Instance() = default;
  explicit Instance(std::vector<Item> items, std::optional<Bounds> bounds = std::nullopt);

  std::span<const Item> items() const noexcept { return items_; }
  const Item& operator[](std::size_t i) const { return items_[i]; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  const std::optional<Bounds>& bounds() const noexcept { return bounds_; }

  double total_weight() const noexcept;

  /// First k items, same bounds.
  Instance prefix(std::size_t k) const;
  Instance with_bounds(std::optional<Bounds> bounds) const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::vector<Item> items_;
  std::optional<Bounds> bounds_;
};

struct PointPrediction {
  double vhat = 0.0;
  friend bool operator==(const PointPrediction&, const PointPrediction&) = default;
};

struct IntervalPrediction {
  double lo = 0.0;
  double hi = 0.0;
  friend bool operator==(const IntervalPrediction&, const IntervalPrediction&) = default;
};

/// Point or interval estimate of the critical value; may be wrong.
class Prediction {
 public:
  static Prediction point(double vhat);
  static Prediction interval(double lo, double hi);

  bool is_point() const noexcept { return std::holds_alternative<PointPrediction>(v_); }
  bool is_interval() const noexcept { return std::holds_alternative<IntervalPrediction>(v_); }
  const PointPrediction& as_point() const;
  const IntervalPrediction& as_interval() const;

  /// Whether the critical value `vhat` is consistent with this prediction.
  bool contains(double vhat) const noexcept;

  std::string to_string() const;

  friend bool operator==(const Prediction&, const Prediction&) = default;

 private:
  explicit Prediction(std::variant<PointPrediction, IntervalPrediction> v) : v_(v) {}
  std::variant<PointPrediction, IntervalPrediction> v_;
};

enum class Mode { Fractional, Integral };

struct Solution {
  std::vector<double> decisions;  // accepted weight per item
  double profit = 0.0;
  double utilization = 0.0;
  Mode mode = Mode::Fractional;

  /// Builds profit and utilization from `decisions`.
  static Solution from_decisions(const Instance& instance, std::vector<double> decisions,
                                 Mode mode);
};

/// Throws InfeasibilityError if `s` violates a Solution invariant for `instance`.
void validate_solution(const Instance& instance, const Solution& s);

/// Step-wise online state machine. Each call to step() sees one item and
/// returns the irrevocable accepted weight for it.
class OnlineAlgorithm {
 public:
  virtual ~OnlineAlgorithm() = default;

  virtual double step(const Item& item) = 0;
  virtual double utilization() const noexcept = 0;
  virtual Mode mode() const noexcept { return Mode::Fractional; }
  virtual std::string name() const = 0;
};

/// Feeds `instance` to `alg` in arrival order and assembles the Solution.
/// Throws InfeasibilityError if a step over-accepts beyond kFeasibilityTol.
Solution run_online(OnlineAlgorithm& alg, const Instance& instance);

}  // namespace okp
