#include <string>

#include "okp/algorithms.hpp"
#include "okp/conversion.hpp"
#include "okp/format.hpp"

namespace okp {
namespace {

double spec_number(std::string_view text, std::string_view spec) {
  try {
    return parse_double(text, "number");
  } catch (const DataError&) {
    throw ConfigError("bad number '" + std::string(text) + "' in algorithm spec '" +
                      std::string(spec) + "'");
  }
}

const Prediction& need_prediction(const std::optional<Prediction>& p, std::string_view alg) {
  if (!p) throw ConfigError("algorithm '" + std::string(alg) + "' requires a prediction");
  return *p;
}

double need_point(const std::optional<Prediction>& p, std::string_view alg) {
  const auto& pred = need_prediction(p, alg);
  if (!pred.is_point()) {
    throw ConfigError("algorithm '" + std::string(alg) + "' requires a point prediction, got " +
                      pred.to_string());
  }
  return pred.as_point().vhat;
}

const Bounds& need_bounds(const std::optional<Bounds>& b, std::string_view alg) {
  if (!b) {
    throw ConfigError("algorithm '" + std::string(alg) + "' requires value bounds [L, U]");
  }
  return *b;
}

}  // namespace

std::unique_ptr<OnlineAlgorithm> make_algorithm(std::string_view spec,
                                                const std::optional<Prediction>& prediction,
                                                const std::optional<Bounds>& bounds) {
  spec = trim(spec);
  if (spec == "ta") {
    const auto& b = need_bounds(bounds, spec);
    return std::make_unique<ThresholdAlgorithm>(b.lower, b.upper);
  }
  if (spec == "ppn") return std::make_unique<NaivePointAlgorithm>(need_point(prediction, spec));
  if (spec == "ppn-strict") {
    return std::make_unique<NaivePointAlgorithm>(need_point(prediction, spec), true);
  }
  if (spec == "ppb") return std::make_unique<BasicPointAlgorithm>(need_point(prediction, spec));
  if (spec == "ppa") return std::make_unique<PrebuyPointAlgorithm>(need_point(prediction, spec));
  if (spec == "ipa") {
    const auto& pred = need_prediction(prediction, spec);
    if (!pred.is_interval()) {
      throw ConfigError("algorithm 'ipa' requires an interval prediction, got " +
                        pred.to_string());
    }
    const auto iv = pred.as_interval();
    if (!(iv.lo > 0.0)) throw ConfigError("ipa with a TA sub-algorithm requires lo > 0");
    return std::make_unique<IntervalAlgorithm>(iv.lo, iv.hi);
  }
  if (spec.starts_with("ma:")) {
    const auto rest = spec.substr(3);
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) {
      throw ConfigError("expected ma:<lambda>:<inner>, got '" + std::string(spec) + "'");
    }
    const double lambda = spec_number(rest.substr(0, colon), spec);
    const auto inner_spec = rest.substr(colon + 1);
    if (inner_spec != "ppa" && inner_spec != "ipa") {
      throw ConfigError("ma inner algorithm must be ppa or ipa, got '" +
                        std::string(inner_spec) + "'");
    }
    const auto& b = need_bounds(bounds, spec);
    return std::make_unique<MixingAlgorithm>(lambda, make_algorithm(inner_spec, prediction, bounds),
                                             b.lower, b.upper);
  }
  if (spec.starts_with("conv:")) {
    const auto rest = spec.substr(5);
    const auto last = rest.rfind(':');
    const auto mid = last == std::string_view::npos ? last : rest.rfind(':', last - 1);
    if (last == std::string_view::npos || mid == std::string_view::npos || mid == 0) {
      throw ConfigError("expected conv:<inner>:<delta>:<epsilon>, got '" + std::string(spec) +
                        "'");
    }
    const double delta = spec_number(rest.substr(mid + 1, last - mid - 1), spec);
    const double epsilon = spec_number(rest.substr(last + 1), spec);
    const auto& b = need_bounds(bounds, spec);
    return std::make_unique<ConversionAlgorithm>(
        make_algorithm(rest.substr(0, mid), prediction, bounds), delta, epsilon, b.lower,
        b.upper);
  }
  throw ConfigError("unknown algorithm spec '" + std::string(spec) + "'");
}

Solution online_run(std::string_view spec, const Instance& instance,
                    const std::optional<Prediction>& prediction) {
  auto alg = make_algorithm(spec, prediction, instance.bounds());
  return run_online(*alg, instance);
}

}  // namespace okp
