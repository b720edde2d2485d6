#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "okp/algorithms.hpp"
#include "okp/offline.hpp"

using namespace okp;

namespace {
constexpr double e = std::numbers::e;

std::vector<double> run_decisions(OnlineAlgorithm& alg, const std::vector<Item>& items) {
  std::vector<double> out;
  for (const auto& it : items) out.push_back(alg.step(it));
  return out;
}
}  // namespace

TEST_CASE("threshold function values") {
  CHECK(ta_threshold(0.0, 1.0, e) == 1.0);
  CHECK(ta_threshold(1.0, 1.0, e) == doctest::Approx(e));
  CHECK(ta_threshold(0.75, 1.0, e) == doctest::Approx(std::exp(0.5)));
  CHECK(ta_threshold(0.49, 1.0, e) == 1.0);
  CHECK_THROWS_AS(ta_threshold(0.5, 2.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(ta_threshold(1.5, 1.0, 2.0), std::domain_error);
  for (double v : {1.0, 1.3, 2.0, 2.7}) {
    const double z = ta_threshold_inverse(v, 1.0, e);
    if (z > 0.5) CHECK(ta_threshold(z, 1.0, e) == doctest::Approx(v));
  }
}

TEST_CASE("threshold algorithm steps") {
  {
    ThresholdAlgorithm ta(1.0, e);
    CHECK(ta.step({1.0, 1.0}) == doctest::Approx(0.5));
    CHECK(ta.competitive_ratio() == doctest::Approx(2.0));
  }
  {
    ThresholdAlgorithm ta(1.0, e);
    CHECK(ta.step({e, 1.0}) == doctest::Approx(1.0));
  }
  {
    ThresholdAlgorithm ta(1.0, e);
    CHECK(ta.step({e, 0.9}) == doctest::Approx(0.9));
    CHECK(ta.step({1.0, 0.5}) == 0.0);
  }
  {
    ThresholdAlgorithm ta(1.0, e);
    const auto s = run_online(ta, Instance({{1.0, 1.0}}));
    CHECK(s.profit == doctest::Approx(0.5));
  }
}

TEST_CASE("threshold algorithm matches a bisection simulator") {
  CounterRng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = oracle::random_instance(rng, 40, 1.0, 200.0, 0.2);
    ThresholdAlgorithm ta(1.0, 200.0);
    oracle::ThresholdSim sim{1.0, 200.0};
    for (const auto& it : inst.items()) {
      CHECK(ta.step(it) == doctest::Approx(sim.step(it)).epsilon(1e-9).scale(1.0));
    }
  }
}

TEST_CASE("naive point algorithm") {
  NaivePointAlgorithm ppn(1.0);
  CHECK(ppn.step({0.5, 0.3}) == 0.0);
  CHECK(ppn.step({1.0, 0.4}) == doctest::Approx(0.4));
  CHECK(ppn.step({2.0, 0.9}) == doctest::Approx(0.6));
  CHECK(ppn.step({5.0, 0.1}) == 0.0);

  NaivePointAlgorithm strict(1.0, true);
  CHECK(strict.step({1.0, 0.4}) == 0.0);
  CHECK(strict.step({1.5, 0.4}) == doctest::Approx(0.4));
}

TEST_CASE("naive point algorithm worst case") {
  const Instance inst({{1.0, 1.0}, {1000.0, 0.999}}, Bounds{1.0, 1000.0});
  const auto sol = online_run("ppn", inst, Prediction::point(1.0));
  const double opt = critical_value(inst).opt_profit;
  CHECK(opt == doctest::Approx(999.001));
  CHECK(opt / sol.profit == doctest::Approx(999.001));
}

TEST_CASE("basic point algorithm examples") {
  {
    BasicPointAlgorithm ppb(1.0);
    const auto x = run_decisions(ppb, {{1, 0.6}, {2, 0.5}});
    CHECK(x[0] == doctest::Approx(0.3));
    CHECK(x[1] == doctest::Approx(0.25));
  }
  {
    BasicPointAlgorithm ppb(1.0);
    const auto x = run_decisions(ppb, {{1, 0.8}, {1, 0.8}});
    CHECK(x[0] == doctest::Approx(0.4));
    CHECK(x[1] == doctest::Approx(0.1));
    CHECK(ppb.omega() == doctest::Approx(1.0));
    CHECK(x[0] + x[1] == doctest::Approx(0.5));
  }
  {
    BasicPointAlgorithm ppb(1.0);
    CHECK(ppb.step({0.9, 1.0}) == 0.0);
  }
}

TEST_CASE("basic point algorithm matches simulator") {
  CounterRng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = oracle::random_instance(rng, 12);
    const double vhat = critical_value(inst).vhat;
    BasicPointAlgorithm ppb(vhat);
    oracle::BasicSim sim{vhat};
    for (const auto& it : inst.items()) CHECK(ppb.step(it) == doctest::Approx(sim.step(it)));
  }
}

TEST_CASE("prebuying algorithm examples") {
  {
    PrebuyPointAlgorithm ppa(1.0);
    CHECK(ppa.step({1.0, 1.0}) == doctest::Approx(0.5));
    CHECK(ppa.state().omega == doctest::Approx(1.0));
  }
  {
    PrebuyPointAlgorithm ppa(1.0);
    const auto x = run_decisions(ppa, {{5, 0.5}, {1, 1}});
    CHECK(x[0] == doctest::Approx(0.5));
    CHECK(x[1] == doctest::Approx(0.25));
    CHECK(ppa.state().s == doctest::Approx(0.75));
    CHECK(ppa.state().profit == doctest::Approx(2.75));
  }
  {
    PrebuyPointAlgorithm ppa(1.0);
    ppa.step({3.0, 0.2});
    const auto before = ppa.state();
    CHECK(ppa.step({0.5, 0.7}) == 0.0);
    CHECK(ppa.state().s == before.s);
    CHECK(ppa.state().omega == before.omega);
  }
  {
    const auto s = online_run("ppa", Instance{}, Prediction::point(1.0));
    CHECK(s.profit == 0.0);
    CHECK(s.utilization == 0.0);
  }
}

TEST_CASE("prebuying algorithm matches simulator and keeps its invariant") {
  CounterRng rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const auto inst = oracle::random_instance(rng, 15);
    const double vhat = critical_value(inst).vhat;
    PrebuyPointAlgorithm ppa(vhat);
    oracle::PrebuySim sim{vhat};
    for (const auto& it : inst.items()) {
      CHECK(ppa.step(it) == doctest::Approx(sim.step(it)).epsilon(1e-12));
      const auto& st = ppa.state();
      CHECK(std::fabs(st.s - (st.omega + st.tilde_omega) / (1.0 + st.omega)) <= 1e-9);
    }
  }
}

TEST_CASE("interval algorithm examples") {
  {
    IntervalAlgorithm ipa(1.0, e);
    CHECK(ipa.alpha() == doctest::Approx(2.0));
    CHECK(ipa.step({10.0, 0.3}) == doctest::Approx(0.1));
  }
  {
    IntervalAlgorithm ipa(1.0, e);
    CHECK(ipa.step({0.5, 0.4}) == 0.0);
  }
  {
    IntervalAlgorithm ipa(1.0, e);
    CHECK(ipa.step({1.0, 1.0}) == doctest::Approx(1.0 / 3.0));
  }
}

TEST_CASE("mixing algorithm combines the two machines") {
  // Both machines take all of (1, 0.4): TA fills up to half capacity at L.
  MixingAlgorithm ma(0.5, std::make_unique<NaivePointAlgorithm>(1.0), 1.0, e);
  const double x = ma.step({1.0, 0.4});
  CHECK(ma.last_predictive() == doctest::Approx(0.4));
  CHECK(ma.last_robust() == doctest::Approx(0.4));
  CHECK(x == doctest::Approx(0.4));

  MixingAlgorithm mb(0.5, std::make_unique<NaivePointAlgorithm>(1.0), 1.0, e);
  mb.step({1.0, 0.5});   // both take 0.5
  const double y = mb.step({1.0, 0.4});  // predictive 0.4, TA 0
  CHECK(mb.last_predictive() == doctest::Approx(0.4));
  CHECK(mb.last_robust() == doctest::Approx(0.0));
  CHECK(y == doctest::Approx(0.2));

  CHECK_THROWS_AS(MixingAlgorithm(1.0, std::make_unique<NaivePointAlgorithm>(1.0), 1.0, e),
                  ConfigError);
  CHECK_THROWS_AS(MixingAlgorithm(0.0, std::make_unique<NaivePointAlgorithm>(1.0), 1.0, e),
                  ConfigError);
}

TEST_CASE("mixing near lambda = 1 tracks the prediction machine") {
  CounterRng rng(41);
  const auto inst = oracle::random_instance(rng, 30, 1.0, 50.0, 0.2);
  const auto pred = Prediction::point(critical_value(inst).vhat);
  const auto pure = online_run("ppa", inst, pred);
  const auto mixed = online_run("ma:0.999:ppa", inst, pred);
  for (std::size_t i = 0; i < inst.size(); ++i) {
    CHECK(std::fabs(mixed.decisions[i] - pure.decisions[i]) <= 1e-3 * inst[i].weight * (1 + 1e-9));
  }
}

TEST_CASE("algorithm spec registry") {
  const Instance inst({{2.0, 0.5}, {3.0, 0.7}}, Bounds{1.0, 4.0});
  const auto point = Prediction::point(2.0);
  const auto iv = Prediction::interval(1.5, 3.0);
  CHECK(make_algorithm("ta", std::nullopt, inst.bounds())->name() == "ta");
  CHECK(make_algorithm("ppn", point, std::nullopt)->name() == "ppn");
  CHECK(make_algorithm("ppb", point, std::nullopt)->name() == "ppb");
  CHECK(make_algorithm("ppa", point, std::nullopt)->name() == "ppa");
  CHECK(make_algorithm("ipa", iv, std::nullopt)->name() == "ipa");
  CHECK(make_algorithm("ma:0.5:ppa", point, inst.bounds())->name() == "ma:0.5:ppa");
  CHECK(make_algorithm("ma:0.3:ipa", iv, inst.bounds())->name() == "ma:0.3:ipa");
  CHECK(make_algorithm("conv:ppa:0.05:0.001", point, inst.bounds())->mode() == Mode::Integral);
  CHECK_THROWS_AS(make_algorithm("ta", std::nullopt, std::nullopt), ConfigError);
  CHECK_THROWS_AS(make_algorithm("ppa", std::nullopt, std::nullopt), ConfigError);
  CHECK_THROWS_AS(make_algorithm("ppa", iv, std::nullopt), ConfigError);
  CHECK_THROWS_AS(make_algorithm("ipa", point, std::nullopt), ConfigError);
  CHECK_THROWS_AS(make_algorithm("ma:1.5:ppa", point, inst.bounds()), ConfigError);
  CHECK_THROWS_AS(make_algorithm("ma:0.5:ta", point, inst.bounds()), ConfigError);
  CHECK_THROWS_AS(make_algorithm("nope", point, inst.bounds()), ConfigError);
  CHECK_THROWS_AS(make_algorithm("conv:ppa:x:0.001", point, inst.bounds()), ConfigError);
  CHECK(online_run("ppa", inst, point).decisions.size() == 2);
}
