#include <catch2/catch_amalgamated.hpp>

#include "pat/bounds.hpp"
#include "pat/rng.hpp"
#include "scenarios.hpp"

using namespace pat;
using namespace pat::testing;

namespace {
const UtilityDeltas kBaselineDeltas{25.0, 25.0, 10.0};
}

TEST_CASE("prior_bound_known") {
  auto p = power(GaussianMeanTest{1.0}, 0.16);
  auto b = prior_bound_known(p.beta0, p.beta1, kBaselineDeltas);
  CHECK(b.value == Catch::Approx(0.2986782463).margin(1e-6));
  CHECK(b.status == BoundStatus::Valid);

  SECTION("ideal-agent boundary: beta1 D1 = L gives zero") {
    auto z = prior_bound_known(0.2, 0.4, kBaselineDeltas);
    CHECK(z.value == Catch::Approx(0.0).margin(1e-14));
  }
  SECTION("requires beta1 > beta0") {
    CHECK_THROWS_AS(prior_bound_known(0.5, 0.5, kBaselineDeltas), std::invalid_argument);
  }
  SECTION("negative below the ideal-agent threshold") {
    auto below = power(GaussianMeanTest{1.0}, 0.05);
    auto r = prior_bound_known(below.beta0, below.beta1, kBaselineDeltas);
    CHECK(r.value < 0.0);
    CHECK(r.status == BoundStatus::NoOptInRegion);
    CHECK(r.clamped == 0.0);
  }
}

TEST_CASE("prior_bound_envelope") {
  SECTION("linear, kappa = 1, tau = 0 gives (R - c)/R") {
    auto b = prior_bound_envelope(0.0, 1.0, kBaselineDeltas);
    CHECK(b.value == Catch::Approx(0.6).margin(1e-12));
  }
  SECTION("boundary tau = c/R gives one") {
    auto b = prior_bound_envelope(0.4, 1.0, kBaselineDeltas);
    CHECK(b.value == Catch::Approx(1.0).margin(1e-12));
    CHECK(b.status == BoundStatus::Vacuous);
  }
  SECTION("reduces to the known bound at kappa = beta1, tau = beta0") {
    auto p = power(GaussianMeanTest{1.0}, 0.2);
    CHECK(prior_bound_envelope(p.beta0, p.beta1, kBaselineDeltas).value ==
          Catch::Approx(prior_bound_known(p.beta0, p.beta1, kBaselineDeltas).value)
              .margin(1e-12));
  }
  SECTION("dominates the known bound") {
    for (double tau : {0.1, 0.15, 0.2, 0.3}) {
      auto p = power(GaussianMeanTest{1.0}, tau);
      CHECK(prior_bound_envelope(tau, 1.0, kBaselineDeltas).value >=
            prior_bound_known(p.beta0, p.beta1, kBaselineDeltas).value - 1e-12);
    }
  }
  CHECK_THROWS_AS(prior_bound_envelope(0.5, 0.4, kBaselineDeltas), std::invalid_argument);
}

TEST_CASE("fdr_bound_known") {
  auto p = power(GaussianMeanTest{1.0}, 0.16);
  auto b = fdr_bound_known(p.beta0, p.beta1, kBaselineDeltas);
  CHECK(b.value == Catch::Approx(0.1194712985).margin(1e-6));
  CHECK(b.status == BoundStatus::Valid);

  SECTION("zero at the ideal-agent boundary") {
    CHECK(fdr_bound_known(0.2, 0.4, kBaselineDeltas).value ==
          Catch::Approx(0.0).margin(1e-14));
  }
  SECTION("linear reduction identity") {
    for (double tau : {0.12, 0.2, 0.3}) {
      auto pw = power(GaussianMeanTest{1.0}, tau);
      double closed = (pw.beta0 * 25.0 / 10.0) * (pw.beta1 * 25.0 - 10.0) /
                      ((pw.beta1 - pw.beta0) * 25.0);
      CHECK(fdr_bound_known(pw.beta0, pw.beta1, kBaselineDeltas).value ==
            Catch::Approx(closed).margin(1e-12));
    }
  }
  SECTION("vacuous once even the worst agent opts in") {
    // beta0 >= L/D0 = 0.4 for the baseline linear deltas.
    auto r = fdr_bound_known(0.45, 0.8, kBaselineDeltas);
    CHECK(r.status == BoundStatus::Vacuous);
    CHECK(r.clamped == 1.0);
  }
}

TEST_CASE("fdr_bound_conservative") {
  SECTION("linear closed form tau (R - c) / ((1 - tau) c)") {
    auto b = fdr_bound_conservative(0.2, 1.0, kBaselineDeltas);
    CHECK(b.value == Catch::Approx(0.375).margin(1e-12));
  }
  SECTION("FDA standard protocol, risk-neutral, R1 = $1B") {
    Scenario s{5000.0, 200.0, UtilityModel::linear(),
               RewardModel{ConstantReward{800.0}, ConstantReward{1000.0}},
               GaussianMeanTest{1.0}};
    auto b = fdr_bound_conservative(0.000625, 1.0, conservative_deltas(s));
    CHECK(b.value == Catch::Approx(0.0025).margin(1e-6));
  }
  SECTION("FDA standard protocol, CRRA(0.35), R1 = $25B") {
    Scenario s{5000.0, 200.0, UtilityModel::crra(0.35),
               RewardModel{ConstantReward{800.0}, ConstantReward{25000.0}},
               GaussianMeanTest{1.0}};
    auto b = fdr_bound_conservative(0.000625, 1.0, conservative_deltas(s));
    CHECK(b.value == Catch::Approx(0.05).margin(1e-3));
  }
}

TEST_CASE("bates_bound") {
  CHECK(bates_bound(0.16, 25.0, 10.0).value == Catch::Approx(0.4).margin(1e-14));
  CHECK(bates_bound(0.0, 25.0, 10.0).value == 0.0);
  CHECK(bates_bound(0.4, 25.0, 10.0).value == Catch::Approx(1.0).margin(1e-14));
  CHECK_THROWS_AS(bates_bound(0.1, 25.0, 0.0), std::invalid_argument);
}

TEST_CASE("ordering chain known <= conservative <= bates on [0, c/R]") {
  auto s = baseline_scenario();
  auto deltas = utility_deltas(s);
  auto deltas_bar = conservative_deltas(s);
  for (int i = 1; i <= 1000; ++i) {
    double tau = 0.4 * i / 1000.0;
    auto p = power(s.test, tau);
    double known = fdr_bound_known(p.beta0, p.beta1, deltas).value;
    double cons = fdr_bound_conservative(tau, 1.0, deltas_bar).value;
    double bates = bates_bound(tau, 25.0, 10.0).value;
    CHECK(known <= cons + 1e-12);
    CHECK(cons <= bates + 1e-12);
  }
}

TEST_CASE("prior bound is increasing in beta0 and beta1") {
  Rng rng(29);
  for (int i = 0; i < 500; ++i) {
    double beta0 = 0.01 + 0.3 * rng.uniform();
    double beta1 = beta0 + 0.05 + (0.9 - beta0) * rng.uniform() * 0.9;
    double d0 = 5.0 + 20.0 * rng.uniform();
    double d1 = d0 + 20.0 * rng.uniform();
    double loss = beta0 * d0 + 0.5 + 3.0 * rng.uniform();  // L > beta0 D0
    if (beta1 * d1 <= loss) continue;                      // stay in the opt-in region
    UtilityDeltas d{d0, d1, loss};
    const double h = 1e-6;
    double base = prior_bound_known(beta0, beta1, d).value;
    CHECK(prior_bound_known(beta0 + h, beta1, d).value >= base - 1e-12);
    CHECK(prior_bound_known(beta0, beta1 + h, d).value >= base - 1e-12);
  }
}

TEST_CASE("conservative bound is increasing in each of its four arguments") {
  Rng rng(31);
  int tested = 0;
  while (tested < 500) {
    double tau = 0.01 + 0.3 * rng.uniform();
    double kappa = tau + 0.1 + (1.0 - tau - 0.1) * rng.uniform();
    double d0 = 5.0 + 20.0 * rng.uniform();
    double d1 = d0 + 20.0 * rng.uniform();
    double loss = tau * d0 + 0.5 + 3.0 * rng.uniform();  // L - tau D0 >= 0
    if (kappa * d1 - loss <= 0.0) continue;              // beta1 D1 - L >= 0
    ++tested;
    const double h = 1e-6;
    UtilityDeltas d{d0, d1, loss};
    double base = fdr_bound_conservative(tau, kappa, d).value;
    CHECK(fdr_bound_conservative(tau + h, kappa, d).value >= base - 1e-12);
    if (kappa + h <= 1.0)
      CHECK(fdr_bound_conservative(tau, kappa + h, d).value >= base - 1e-12);
    CHECK(fdr_bound_conservative(tau, kappa, {d0 + h, d1, loss}).value >= base - 1e-12);
    CHECK(fdr_bound_conservative(tau, kappa, {d0, d1 + h, loss}).value >= base - 1e-12);
  }
}

TEST_CASE("any opting prior respects the elicitation bound") {
  Rng rng(37);
  auto s = baseline_scenario();
  for (int i = 0; i < 500; ++i) {
    double tau = 0.01 + 0.5 * rng.uniform();
    double pi0 = rng.uniform();
    if (!opts_in(s, pi0, tau)) continue;
    auto p = power(s.test, tau);
    auto b = prior_bound_known(p.beta0, p.beta1, utility_deltas(s));
    CHECK(pi0 <= b.value + 1e-10);
  }
}

TEST_CASE("bound decreases with risk aversion") {
  auto base = baseline_scenario();
  std::vector<UtilityDeltas> deltas;
  for (double g : {0.0, 0.35, 0.7})
    deltas.push_back(utility_deltas(with_utility(
        base, g == 0.0 ? UtilityModel::linear() : UtilityModel::crra(g))));

  for (double tau = 0.12; tau <= 0.3; tau += 0.01) {
    auto p = power(base.test, tau);
    double prev = 2.0;
    for (const auto& d : deltas) {
      auto b = fdr_bound_known(p.beta0, p.beta1, d);
      if (b.status != BoundStatus::Valid) continue;
      CHECK(b.value < prev + 1e-12);
      prev = b.value;
    }
  }
}
