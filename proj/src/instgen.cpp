#include "okp/instgen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "okp/format.hpp"
#include "okp/offline.hpp"
#include "okp/random.hpp"

namespace okp {
namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw ConfigError(msg);
}

// Inserts `extra` at uniformly random positions, preserving the relative order
// of both sequences.
std::vector<Item> interleave(std::vector<Item> base, const std::vector<Item>& extra,
                             CounterRng& rng) {
  for (const auto& it : extra) {
    const auto pos = rng.below(base.size() + 1);
    base.insert(base.begin() + static_cast<long>(pos), it);
  }
  return base;
}

Bounds placement_range(const Instance& instance) {
  if (instance.bounds()) return *instance.bounds();
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (const auto& it : instance.items()) {
    if (it.value > 0.0) lo = std::min(lo, it.value);
    hi = std::max(hi, it.value);
  }
  if (!std::isfinite(lo)) lo = hi;
  return {lo, hi};
}

Prediction correct_interval(double vhat, const Bounds& range, double pct, CounterRng& rng) {
  const double width = pct / 100.0 * (range.upper - range.lower);
  // An empty instance tail (every item fits) reports vhat = 0; every value at
  // or below L behaves the same, so place the interval as if vhat = L.
  const double v = std::clamp(vhat, range.lower, range.upper);
  const double lo_min = std::max(range.lower, v - width);
  const double lo_max = std::max(lo_min, std::min(v, range.upper - width));
  const double lo = rng.uniform(lo_min, lo_max);
  return Prediction::interval(lo, std::max(lo + width, v));
}

Prediction wrong_point(double vhat, const Bounds& range, CounterRng& rng) {
  if (range.upper <= range.lower) {
    throw ConfigError("cannot draw a wrong point prediction on a degenerate range");
  }
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const double v = rng.uniform(range.lower, range.upper);
    if (std::fabs(v - vhat) > 1e-6 * std::max(std::fabs(vhat), range.lower)) {
      return Prediction::point(v);
    }
  }
  throw ConfigError("failed to draw a wrong point prediction");
}

Prediction wrong_interval(double vhat, const Bounds& range, double pct, CounterRng& rng) {
  const double width = pct / 100.0 * (range.upper - range.lower);
  // Valid starts: [L, vhat - width) below vhat, or (vhat, U - width] above it.
  const double below_len = std::max(0.0, std::min(vhat - width, range.upper - width) - range.lower);
  const double above_start = std::max(vhat, range.lower);
  const double above_len = std::max(0.0, range.upper - width - above_start);
  const double total = below_len + above_len;
  if (!(total > 0.0)) {
    throw ConfigError("no interval of width " + format_double(pct) +
                      "% avoids the critical value " + format_double(vhat));
  }
  const double t = rng.uniform(0.0, total);
  double lo = t < below_len ? range.lower + t : above_start + (t - below_len);
  if (lo <= vhat && vhat <= lo + width) lo = std::nextafter(vhat, range.upper);
  return Prediction::interval(lo, lo + width);
}

}  // namespace

double bounded_pareto_quantile(double u, double lower, double upper, double shape) {
  if (upper <= lower) return lower;
  const double tail = std::pow(lower / upper, shape);
  const double x = lower * std::pow(1.0 - u * (1.0 - tail), -1.0 / shape);
  return std::clamp(x, lower, upper);
}

Instance gen_powerlaw(const PowerLawParams& p, std::uint64_t seed) {
  require(p.n >= 1, "powerlaw: n must be >= 1");
  require(p.lower > 0.0 && p.lower < p.upper, "powerlaw: requires 0 < L < U");
  require(p.value_exponent > 1.0 && p.weight_exponent > 1.0, "powerlaw: exponents must be > 1");
  require(p.weight_scale > 0.0 && p.weight_scale <= 1.0, "powerlaw: weight_scale must be in (0, 1]");

  CounterRng rng(seed);
  std::vector<Item> items(p.n);
  double max_raw = 0.0;
  for (auto& it : items) {
    it.value = bounded_pareto_quantile(rng.uniform(), p.lower, p.upper, p.value_exponent);
    it.weight = std::pow(1.0 - rng.uniform(), -1.0 / p.weight_exponent);
    max_raw = std::max(max_raw, it.weight);
  }
  const double divisor = max_raw / p.weight_scale;
  for (auto& it : items) it.weight /= divisor;
  return Instance(std::move(items), Bounds{p.lower, p.upper});
}

Instance gen_omega_powerlaw(const PowerLawParams& p, double omegahat, std::uint64_t seed) {
  require(omegahat > 0.0 && omegahat < 1.0, "omega-powerlaw: omegahat must be in (0, 1)");
  const Instance base = gen_powerlaw(p, seed);
  CounterRng rng = CounterRng::substream(seed, 1);

  // Critical value: the base instance's own, or the median value if it all fits.
  double crit = critical_value(base).vhat;
  std::vector<double> values;
  for (const auto& it : base.items()) values.push_back(it.value);
  std::sort(values.begin(), values.end());
  if (!(crit > p.lower) || crit >= values.back()) crit = values[values.size() / 2];
  if (crit >= values.back()) crit = p.lower;

  std::vector<Item> kept;
  double high_weight = 0.0;
  for (const auto& it : base.items()) {
    if (values_equal(it.value, crit)) continue;
    if (it.value > crit) high_weight += it.weight;
    kept.push_back(it);
  }
  if (!(high_weight > 0.0)) {
    kept.push_back({p.upper, p.weight_scale});
    high_weight = p.weight_scale;
  }
  const double target_high = 1.0 - omegahat / 2.0;
  for (auto& it : kept) {
    if (it.value > crit) it.weight *= target_high / high_weight;
  }

  const auto pieces = static_cast<std::size_t>(std::max(1.0, std::ceil(omegahat / p.weight_scale)));
  std::vector<Item> critical(pieces, Item{crit, omegahat / static_cast<double>(pieces)});
  return Instance(interleave(std::move(kept), critical, rng), Bounds{p.lower, p.upper});
}

std::pair<Instance, Instance> gen_spike_pair(double omegahat, double upper, double epsilon) {
  require(omegahat > 0.0 && omegahat <= 1.0, "spike-pair: omegahat must be in (0, 1]");
  require(epsilon > 0.0 && epsilon < 1.0, "spike-pair: epsilon must be in (0, 1)");
  require(upper > 1.0, "spike-pair: U must exceed 1");
  const Bounds b{1.0, upper};
  Instance i1({{1.0, omegahat}}, b);
  Instance i2({{1.0, omegahat}, {upper, 1.0 - epsilon}}, b);
  return {std::move(i1), std::move(i2)};
}

Instance gen_x_nondecreasing(double x, double lower, double upper, std::size_t batches,
                             std::size_t m) {
  require(lower > 0.0 && lower <= x && x <= upper, "x-nondecreasing: requires 0 < L <= x <= U");
  require(batches >= 1 && m >= 1, "x-nondecreasing: N and m must be >= 1");
  const double step = (upper - lower) / static_cast<double>(batches);
  std::size_t count = 1;
  if (step > 0.0) {
    const double r = (x - lower) / step;
    const double nearest = std::round(r);
    const double steps = std::fabs(r - nearest) <= 1e-9 * std::max(1.0, r) ? nearest : std::ceil(r);
    count = static_cast<std::size_t>(steps) + 1;
  }
  std::vector<Item> items;
  items.reserve(count * m);
  const double w = 1.0 / static_cast<double>(m);
  for (std::size_t i = 0; i < count; ++i) {
    const double v = std::min(upper, lower + static_cast<double>(i) * step);
    for (std::size_t k = 0; k < m; ++k) items.push_back({v, w});
  }
  return Instance(std::move(items), Bounds{lower, upper});
}

std::pair<Instance, Instance> gen_interval_lb(double lo, double hi, double upper, std::size_t m,
                                              double epsilon, std::size_t batches) {
  require(lo > 0.0 && lo < hi && hi < upper, "interval-lb: requires 0 < lo < hi < U");
  require(epsilon > 0.0 && epsilon < 1.0, "interval-lb: epsilon must be in (0, 1)");
  const Instance ramp = gen_x_nondecreasing(hi, lo, hi, batches == 0 ? m : batches, m);
  std::vector<Item> items(ramp.items().begin(), ramp.items().end());
  const Bounds b{lo, upper};
  Instance i(items, b);
  items.push_back({upper, 1.0 - epsilon});
  return {std::move(i), Instance(std::move(items), b)};
}

ThreeBatch gen_three_batch(double lower, double a, double b, double upper, std::size_t m) {
  require(lower > 0.0 && a >= 1.0 && a < b && b * lower <= upper * (1.0 + 1e-12) && m >= 1,
          "three-batch: requires 1 <= A < B, B L <= U, m >= 1");
  const double w = 1.0 / static_cast<double>(m);
  const Bounds bounds{lower, upper};
  std::vector<Item> items(m, Item{lower, w});
  ThreeBatch out;
  out.first = Instance(items, bounds);
  items.insert(items.end(), m - 1, Item{a * lower, w});
  out.first_two = Instance(items, bounds);
  items.insert(items.end(), 2 * m, Item{std::min(b * lower, upper), w});
  out.full = Instance(std::move(items), bounds);
  return out;
}

std::pair<Instance, Instance> gen_integral_lb_bounded(double kappa, double upper) {
  require(kappa > 0.0 && kappa < 0.25, "integral-lb: kappa must be in (0, 1/4)");
  require(upper >= 1.0, "integral-lb: U must be >= 1");
  const Bounds b{1.0, upper};
  Instance i1({{1.0, 2.0 * kappa}}, b);
  Instance i2({{1.0, 2.0 * kappa}, {upper, 1.0 - kappa}}, b);
  return {std::move(i1), std::move(i2)};
}

std::vector<Instance> gen_integral_lb_smallweight(double kappa, double c, double vhat,
                                                  std::size_t count) {
  require(kappa > 0.0 && kappa < 1.0, "integral-lb: kappa must be in (0, 1)");
  require(c >= 1.0 && vhat > 0.0, "integral-lb: requires c >= 1 and vhat > 0");
  const auto base_n = static_cast<std::size_t>(std::llround(1.0 / kappa));
  require(std::fabs(static_cast<double>(base_n) * kappa - 1.0) < 1e-9,
          "integral-lb: 1/kappa must be an integer");
  const std::size_t max_count = base_n > 1 ? base_n - 1 : 1;
  count = std::min(std::max<std::size_t>(count, 1), max_count);

  std::vector<Item> items(base_n, Item{vhat, kappa});
  std::vector<Instance> family;
  family.emplace_back(items);
  double factor = c / kappa * vhat;
  for (std::size_t i = 2; i <= count; ++i) {
    items.push_back({factor, kappa});
    factor *= c + 1.0;
    family.emplace_back(items);
  }
  return family;
}

double GenSpec::get(const std::string& key, double fallback) const {
  const auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

std::vector<LabeledInstance> generate(const GenSpec& spec) {
  auto size = [&](const char* key, double fallback) {
    const double v = spec.get(key, fallback);
    require(v >= 0.0 && std::floor(v) == v, std::string(key) + " must be a non-negative integer");
    return static_cast<std::size_t>(v);
  };
  std::vector<LabeledInstance> out;
  if (spec.kind == "powerlaw" || spec.kind == "omega-powerlaw") {
    PowerLawParams p;
    p.n = size("n", 1000);
    p.lower = spec.get("L", 1.0);
    p.upper = spec.get("U", 1000.0);
    p.value_exponent = spec.get("value_exponent", 2.0);
    p.weight_exponent = spec.get("weight_exponent", 2.0);
    p.weight_scale = spec.get("weight_scale", 0.05);
    if (spec.kind == "powerlaw") {
      out.push_back({"", gen_powerlaw(p, spec.seed)});
    } else {
      out.push_back({"", gen_omega_powerlaw(p, spec.get("omegahat", 0.5), spec.seed)});
    }
  } else if (spec.kind == "spike-pair") {
    auto [a, b] = gen_spike_pair(spec.get("omegahat", 1.0), spec.get("U", 1000.0),
                                 spec.get("epsilon", 1e-3));
    out.push_back({"I1", std::move(a)});
    out.push_back({"I2", std::move(b)});
  } else if (spec.kind == "interval-lb") {
    auto [a, b] = gen_interval_lb(spec.get("lo", 1.0), spec.get("hi", 10.0),
                                  spec.get("U", 1000.0), size("m", 100), spec.get("epsilon", 1e-3),
                                  size("batches", 0));
    out.push_back({"I", std::move(a)});
    out.push_back({"J", std::move(b)});
  } else if (spec.kind == "three-batch") {
    auto tb = gen_three_batch(spec.get("L", 1.0), spec.get("A", 10.0), spec.get("B", 100.0),
                              spec.get("U", 1000.0), size("m", 100));
    out.push_back({"batch1", std::move(tb.first)});
    out.push_back({"batch12", std::move(tb.first_two)});
    out.push_back({"batch123", std::move(tb.full)});
  } else if (spec.kind == "x-nondecreasing") {
    const double upper = spec.get("U", 1000.0);
    out.push_back({"", gen_x_nondecreasing(spec.get("x", upper), spec.get("L", 1.0), upper,
                                           size("N", 500), size("m", 200))});
  } else if (spec.kind == "integral-lb") {
    if (spec.get("variant", 0.0) == 0.0) {
      auto [a, b] = gen_integral_lb_bounded(spec.get("kappa", 0.01), spec.get("U", 1000.0));
      out.push_back({"I1", std::move(a)});
      out.push_back({"I2", std::move(b)});
    } else {
      auto fam = gen_integral_lb_smallweight(spec.get("kappa", 0.01), spec.get("c", 2.0),
                                             spec.get("vhat", 1.0), size("count", 5));
      for (std::size_t i = 0; i < fam.size(); ++i) {
        out.push_back({"I" + std::to_string(i + 1), std::move(fam[i])});
      }
    }
  } else {
    throw ConfigError("unknown generator kind '" + spec.kind + "'");
  }
  return out;
}

PredictionSpec PredictionSpec::parse(std::string_view text) {
  text = trim(text);
  std::vector<std::string_view> parts;
  for (std::size_t start = 0;;) {
    const auto colon = text.find(':', start);
    parts.push_back(text.substr(start, colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  auto num = [&](std::size_t i) {
    try {
      return parse_double(parts.at(i), "prediction parameter");
    } catch (const std::exception&) {
      throw ConfigError("malformed prediction spec '" + std::string(text) + "'");
    }
  };
  PredictionSpec s;
  const auto head = parts[0];
  if (head == "none" && parts.size() == 1) {
    s.kind = Kind::None;
  } else if (head == "exact" && parts.size() == 1) {
    s.kind = Kind::Exact;
  } else if (head == "point" && parts.size() == 2) {
    s.kind = Kind::PointFixed;
    s.a = num(1);
  } else if (head == "width" && parts.size() == 2) {
    s.kind = Kind::IntervalWidth;
    s.a = num(1);
  } else if (head == "interval" && parts.size() == 3) {
    s.kind = Kind::IntervalFixed;
    s.a = num(1);
    s.b = num(2);
  } else if (head == "untrusted" && parts.size() == 3 && parts[2] == "point") {
    s.kind = Kind::Untrusted;
    s.delta = num(1);
    s.error_model = ErrorModel::Point;
  } else if (head == "untrusted" && parts.size() == 4 && parts[2] == "width") {
    s.kind = Kind::Untrusted;
    s.delta = num(1);
    s.error_model = ErrorModel::Interval;
    s.width_pct = num(3);
  } else {
    throw ConfigError("unknown prediction spec '" + std::string(text) + "'");
  }
  const bool has_width =
      s.kind == Kind::IntervalWidth ||
      (s.kind == Kind::Untrusted && s.error_model == ErrorModel::Interval);
  const double pct = s.kind == Kind::IntervalWidth ? s.a : s.width_pct;
  if (has_width && !(pct > 0.0 && pct <= 100.0)) {
    throw ConfigError("interval width percent must be in (0, 100]");
  }
  if (s.kind == Kind::Untrusted && !(s.delta >= 0.0 && s.delta <= 1.0)) {
    throw ConfigError("delta must be in [0, 1]");
  }
  if (s.kind == Kind::PointFixed) Prediction::point(s.a);
  if (s.kind == Kind::IntervalFixed) Prediction::interval(s.a, s.b);
  return s;
}

std::string PredictionSpec::to_string() const {
  switch (kind) {
    case Kind::None: return "none";
    case Kind::Exact: return "exact";
    case Kind::PointFixed: return "point:" + format_double(a);
    case Kind::IntervalWidth: return "width:" + format_double(a);
    case Kind::IntervalFixed: return "interval:" + format_double(a) + ":" + format_double(b);
    case Kind::Untrusted:
      return "untrusted:" + format_double(delta) +
             (error_model == ErrorModel::Point ? ":point" : ":width:" + format_double(width_pct));
  }
  return "?";
}

Prediction make_prediction(const Instance& instance, const PredictionSpec& spec,
                           std::uint64_t seed) {
  if (instance.empty()) throw DataError("cannot build a prediction for an empty instance");
  CounterRng rng(seed);
  switch (spec.kind) {
    case PredictionSpec::Kind::None:
      throw ConfigError("prediction spec 'none' does not produce a prediction");
    case PredictionSpec::Kind::PointFixed:
      return Prediction::point(spec.a);
    case PredictionSpec::Kind::IntervalFixed:
      return Prediction::interval(spec.a, spec.b);
    default:
      break;
  }
  const double vhat = critical_value(instance).vhat;
  const Bounds range = placement_range(instance);
  switch (spec.kind) {
    case PredictionSpec::Kind::Exact:
      return Prediction::point(vhat);
    case PredictionSpec::Kind::IntervalWidth:
      return correct_interval(vhat, range, spec.a, rng);
    case PredictionSpec::Kind::Untrusted: {
      const bool wrong = rng.uniform() < spec.delta;
      if (spec.error_model == PredictionSpec::ErrorModel::Point) {
        return wrong ? wrong_point(vhat, range, rng) : Prediction::point(vhat);
      }
      return wrong ? wrong_interval(vhat, range, spec.width_pct, rng)
                   : correct_interval(vhat, range, spec.width_pct, rng);
    }
    default:
      break;
  }
  throw ConfigError("unsupported prediction spec");
}

}  // namespace okp
