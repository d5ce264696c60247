// Domain types: utilities, rewards, tests, scenarios, agent mixtures.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "pat/math.hpp"

namespace pat {

// Concave non-decreasing wealth-to-utils map.
// CRRA: u(w) = w^(1-gamma)/(1-gamma), gamma < 1; Log is the gamma = 1 case.
class UtilityModel {
 public:
  enum class Kind { Linear, Crra, Log };

  static UtilityModel linear() { return UtilityModel(Kind::Linear, 0.0); }
  static UtilityModel log() { return UtilityModel(Kind::Log, 1.0); }
  static UtilityModel crra(double gamma) {
    if (!(gamma < 1.0)) throw std::domain_error("UtilityModel: CRRA requires gamma < 1");
    return UtilityModel(Kind::Crra, gamma);
  }

  Kind kind() const { return kind_; }
  double gamma() const { return gamma_; }

  // Requires wealth > 0 except for the linear case.
  double operator()(double wealth) const {
    switch (kind_) {
      case Kind::Linear:
        return wealth;
      case Kind::Log:
        if (!(wealth > 0.0)) throw std::domain_error("UtilityModel: log requires wealth > 0");
        return std::log(wealth);
      case Kind::Crra:
        if (gamma_ == 0.0) return wealth;
        if (!(wealth > 0.0)) throw std::domain_error("UtilityModel: CRRA requires wealth > 0");
        return std::pow(wealth, 1.0 - gamma_) / (1.0 - gamma_);
    }
    throw std::logic_error("UtilityModel: unreachable");
  }

  bool requires_positive_wealth() const { return kind_ != Kind::Linear || gamma_ != 0.0; }

 private:
  UtilityModel(Kind k, double g) : kind_(k), gamma_(g) {}
  Kind kind_;
  double gamma_;
};

// Per-hypothesis reward distribution.
struct ConstantReward {
  double value;
};

struct TruncNormalReward {
  double mu;
  double sigma;
  Interval support;
};

using RewardDist = std::variant<ConstantReward, TruncNormalReward>;

struct RewardModel {
  RewardDist null_reward;
  RewardDist alt_reward;
};

inline double reward_dist_mean(const RewardDist& d) {
  if (const auto* c = std::get_if<ConstantReward>(&d)) return c->value;
  const auto& tn = std::get<TruncNormalReward>(d);
  return truncnorm_expect([](double x) { return x; }, tn.mu, tn.sigma, tn.support);
}

enum class Hypothesis { Null, Alt };

inline double reward_mean(const RewardModel& rewards, Hypothesis h) {
  return reward_dist_mean(h == Hypothesis::Null ? rewards.null_reward
                                                : rewards.alt_reward);
}

// Threshold-indexed approval probabilities (beta0(tau), beta1(tau)).
// GaussianMean: Z ~ N(theta, 1), X = 1 - Phi(Z), so beta0(tau) = tau and
// beta1(tau) = 1 - Phi(Phi^{-1}(1 - tau) - theta1).
struct GaussianMeanTest {
  double theta1;
};

struct ExplicitTest {
  std::function<double(double)> beta0;
  std::function<double(double)> beta1;
};

using TestModel = std::variant<GaussianMeanTest, ExplicitTest>;

struct PowerPair {
  double beta0;
  double beta1;
};

inline PowerPair power(const TestModel& test, double tau) {
  if (!(tau >= 0.0 && tau <= 1.0))
    throw std::domain_error("power: tau must lie in [0,1]");
  if (const auto* g = std::get_if<GaussianMeanTest>(&test)) {
    double b1;
    if (tau <= 0.0)
      b1 = 0.0;
    else if (tau >= 1.0)
      b1 = 1.0;
    else
      b1 = 1.0 - std_normal_cdf(std_normal_quantile(1.0 - tau) - g->theta1);
    return {tau, b1};
  }
  const auto& e = std::get<ExplicitTest>(test);
  PowerPair p{e.beta0(tau), e.beta1(tau)};
  if (p.beta0 > tau + 1e-12)
    throw std::domain_error("power: explicit beta0 violates super-uniformity");
  if (tau > 0.0 && tau < 1.0 && !(p.beta1 > p.beta0))
    throw std::domain_error("power: explicit test has no power at tau");
  return p;
}

// Bundle of W0, c, utility, rewards, and test.
struct Scenario {
  double wealth0;
  double cost;
  UtilityModel utility;
  RewardModel rewards;
  TestModel test;
};

// K agent types sharing everything but (prior_null, weight).
struct AgentType {
  double prior_null;
  double weight;
};

struct AgentMixture {
  std::vector<AgentType> types;

  void check() const {
    double total = 0.0;
    for (const auto& t : types) {
      if (!(t.prior_null >= 0.0 && t.prior_null <= 1.0))
        throw std::domain_error("AgentMixture: prior_null must lie in [0,1]");
      if (!(t.weight >= 0.0))
        throw std::domain_error("AgentMixture: weights must be non-negative");
      total += t.weight;
    }
    if (std::abs(total - 1.0) > 1e-12)
      throw std::domain_error("AgentMixture: weights must sum to 1");
  }
};

struct ValidationCheck {
  std::string name;
  bool passed;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const ValidationCheck& c) { return c.passed; });
  }
};

namespace detail {

inline double reward_dist_min(const RewardDist& d) {
  if (const auto* c = std::get_if<ConstantReward>(&d)) return c->value;
  return std::get<TruncNormalReward>(d).support.lo;
}

inline double survival(const RewardDist& d, double r) {
  if (const auto* c = std::get_if<ConstantReward>(&d)) return c->value >= r ? 1.0 : 0.0;
  const auto& tn = std::get<TruncNormalReward>(d);
  if (r <= tn.support.lo) return 1.0;
  if (r > tn.support.hi) return 0.0;
  const double za = (tn.support.lo - tn.mu) / tn.sigma;
  const double zb = (tn.support.hi - tn.mu) / tn.sigma;
  const double zr = (r - tn.mu) / tn.sigma;
  const double mass = std_normal_cdf(zb) - std_normal_cdf(za);
  return (std_normal_cdf(zb) - std_normal_cdf(zr)) / mass;
}

// Pointwise survival-function dominance on a grid over the union support.
inline bool stochastically_dominated(const RewardDist& lo, const RewardDist& hi) {
  const auto* c0 = std::get_if<ConstantReward>(&lo);
  const auto* c1 = std::get_if<ConstantReward>(&hi);
  if (c0 && c1) return c0->value <= c1->value + 1e-12;
  double a = std::min(c0 ? c0->value : std::get<TruncNormalReward>(lo).support.lo,
                      c1 ? c1->value : std::get<TruncNormalReward>(hi).support.lo);
  double b = std::max(c0 ? c0->value : std::get<TruncNormalReward>(lo).support.hi,
                      c1 ? c1->value : std::get<TruncNormalReward>(hi).support.hi);
  const int n = 1000;
  for (int i = 0; i <= n; ++i) {
    double r = a + (b - a) * i / n;
    if (survival(lo, r) > survival(hi, r) + 1e-9) return false;
  }
  return true;
}

}  // namespace detail

// Checks the standing assumptions: W0 > c > 0, super-uniformity on a tau grid,
// non-dominating cost, stochastic monotonicity, positive-wealth domain.
inline ValidationReport validate(const Scenario& s) {
  ValidationReport rep;
  auto add = [&](std::string name, bool pass, std::string detail = "") {
    rep.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  add("wealth_cost", s.wealth0 > s.cost && s.cost > 0.0,
      "requires W0 > c > 0");

  bool domain_ok = true;
  if (s.utility.requires_positive_wealth()) {
    domain_ok = s.wealth0 - s.cost > 0.0 &&
                detail::reward_dist_min(s.rewards.null_reward) + s.wealth0 - s.cost > 0.0 &&
                detail::reward_dist_min(s.rewards.alt_reward) + s.wealth0 - s.cost > 0.0;
  }
  add("utility_domain", domain_ok, "all reachable wealths must be positive");

  bool cost_ok = true;
  std::string cost_detail;
  try {
    double r0 = reward_mean(s.rewards, Hypothesis::Null);
    double r1 = reward_mean(s.rewards, Hypothesis::Alt);
    cost_ok = r0 >= s.cost && r1 >= s.cost;
    if (!cost_ok) cost_detail = "mean reward below cost";
  } catch (const std::exception& e) {
    cost_ok = false;
    cost_detail = e.what();
  }
  add("non_dominating_cost", cost_ok, cost_detail);

  add("stochastic_monotonicity",
      detail::stochastically_dominated(s.rewards.null_reward, s.rewards.alt_reward),
      "null reward must be stochastically dominated by alt reward");

  bool super = true, nontrivial = true;
  try {
    for (int i = 1; i < 20; ++i) {
      double tau = i / 20.0;
      PowerPair p = power(s.test, tau);
      if (p.beta0 > tau + 1e-12) super = false;
      if (!(p.beta1 > p.beta0)) nontrivial = false;
    }
  } catch (const std::exception&) {
    super = nontrivial = false;
  }
  add("super_uniformity", super, "beta0(tau) <= tau on grid");
  add("nontrivial_power", nontrivial, "beta1(tau) > beta0(tau) on grid");

  return rep;
}

}  // namespace pat
