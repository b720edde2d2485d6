#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "okp/algorithms.hpp"
#include "okp/instgen.hpp"
#include "okp/io.hpp"
#include "okp/offline.hpp"

using namespace okp;

namespace {

struct Case {
  const char* spec;
  const char* prediction;
};

const Case kCases[] = {
    {"ta", "none"},          {"ppn", "exact"},         {"ppn-strict", "exact"},
    {"ppb", "exact"},        {"ppa", "exact"},         {"ipa", "width:20"},
    {"ma:0.3:ppa", "exact"}, {"ma:0.7:ipa", "width:40"}, {"ppa", "untrusted:1:point"},
    {"ppb", "untrusted:1:point"}, {"ipa", "untrusted:1:width:15"},
};

std::optional<Prediction> prediction_for(const Instance& inst, const char* spec, std::uint64_t seed) {
  const auto ps = PredictionSpec::parse(spec);
  if (ps.kind == PredictionSpec::Kind::None) return std::nullopt;
  return make_prediction(inst, ps, seed);
}

}  // namespace

TEST_CASE("fuzz: feasibility, dominance by offline optimum, determinism") {
  CounterRng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.below(60);
    const double max_w = trial % 2 ? 0.1 : 0.9;
    const auto inst = oracle::random_instance(rng, n, 1.0, 100.0, max_w);
    const double opt = critical_value(inst).opt_profit;
    for (const auto& c : kCases) {
      const auto pred = prediction_for(inst, c.prediction, trial);
      const auto a = online_run(c.spec, inst, pred);
      CHECK_NOTHROW(validate_solution(inst, a));
      CHECK(a.utilization <= 1.0 + kFeasibilityTol);
      CHECK(a.profit <= opt * (1.0 + 1e-12) + 1e-12);
      const auto b = online_run(c.spec, inst, prediction_for(inst, c.prediction, trial));
      CHECK(a.decisions == b.decisions);
    }
  }
}

TEST_CASE("online causality: prefix runs reproduce leading decisions") {
  CounterRng rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = oracle::random_instance(rng, 30, 1.0, 100.0, 0.2);
    for (const auto& c : kCases) {
      // The prediction is fixed from the full instance and handed to each prefix run.
      const auto pred = prediction_for(inst, c.prediction, trial);
      const auto full = online_run(c.spec, inst, pred);
      for (std::size_t k : {std::size_t{0}, std::size_t{1}, std::size_t{7}, std::size_t{29}}) {
        const auto part = online_run(c.spec, inst.prefix(k), pred);
        REQUIRE(part.decisions.size() == k);
        CHECK(std::equal(part.decisions.begin(), part.decisions.end(), full.decisions.begin()));
      }
    }
  }
}

TEST_CASE("offline quantities are permutation invariant") {
  CounterRng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = oracle::random_instance(rng, 20);
    std::vector<Item> items(inst.items().begin(), inst.items().end());
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[rng.below(i)]);
    const Instance shuffled(items, inst.bounds());
    const auto a = critical_value(inst), b = critical_value(shuffled);
    CHECK(a.vhat == b.vhat);
    CHECK(a.omegahat == doctest::Approx(b.omegahat).epsilon(1e-12));
    CHECK(a.opt_profit == doctest::Approx(b.opt_profit).epsilon(1e-12));
  }
}

TEST_CASE("critical value is consistent with the offline fill") {
  CounterRng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = oracle::random_instance(rng, 1 + rng.below(20));
    const auto info = critical_value(inst);
    const auto sol = fractional_opt(inst);
    double above = 0.0;
    for (std::size_t i = 0; i < inst.size(); ++i) {
      if (inst[i].value > info.vhat && !values_equal(inst[i].value, info.vhat)) {
        above += inst[i].weight;
        CHECK(sol.decisions[i] == doctest::Approx(inst[i].weight));
      } else if (inst[i].value < info.vhat) {
        CHECK(sol.decisions[i] == 0.0);
      }
    }
    CHECK(above < 1.0);
    if (info.vhat > 0.0) CHECK(above + info.omegahat >= 1.0 - 1e-12);
  }
}

TEST_CASE("fractional relaxation dominates the integral optimum") {
  CounterRng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const auto inst = oracle::random_instance(rng, 1 + rng.below(15));
    CHECK(fractional_opt(inst).profit >= integral_opt_bruteforce(inst) - 1e-9);
  }
}

TEST_CASE("interval predictions contain the critical value") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    PowerLawParams p;
    p.n = 300;
    const auto inst = gen_omega_powerlaw(p, 0.5, seed);
    const double vhat = critical_value(inst).vhat;
    for (const char* s : {"width:15", "width:25", "width:40", "untrusted:0:width:25"}) {
      CHECK(make_prediction(inst, PredictionSpec::parse(s), seed).contains(vhat));
    }
  }
}

TEST_CASE("instance csv is byte stable across write/read cycles") {
  PowerLawParams p;
  p.n = 500;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto inst = gen_powerlaw(p, seed);
    const auto text = instance_csv(inst);
    CHECK(instance_csv(parse_instance_csv(text, inst.bounds())) == text);
    CHECK(parse_instance_csv(text, inst.bounds()) == inst);
  }
}
