// Monte-Carlo oracle for the full game, threshold sweeps, the FDA protocol
// table, and the staircase-sharpness report.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pat/agent.hpp"
#include "pat/bounds.hpp"
#include "pat/mixture.hpp"
#include "pat/model.hpp"
#include "pat/rng.hpp"

namespace pat {

struct SimResult {
  std::uint64_t n_rounds;
  std::uint64_t n_optin;
  std::uint64_t n_null_optin;
  std::uint64_t n_approved;
  std::uint64_t n_false_approved;
  double empirical_fdr;
  std::uint64_t seed;
};

// Per round: draw an agent type by weight, draw null/alt from its prior,
// apply the analytic opt-in decision, draw evidence via Z ~ N(theta,1) and
// X = 1 - Phi(Z), draw the reward independently given theta, approve iff
// X <= tau. Fully deterministic given the seed.
//
// empirical_fdr estimates the population-share mixture FDR: each opting
// type's per-type false-approval rate is weighted by its share of the
// opt-in population, matching the analytic mixture_fdr definition (which
// weights types by opt-in proportion, not by approval volume).
inline SimResult simulate(const Scenario& s, const AgentMixture& mix, double tau,
                          std::uint64_t n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("simulate: n must be >= 1");
  mix.check();
  const auto* gm = std::get_if<GaussianMeanTest>(&s.test);
  if (!gm)
    throw std::invalid_argument("simulate: evidence sampling requires a GaussianMean test");

  // Decisions are deterministic per type; precompute them.
  std::vector<bool> optin(mix.types.size());
  std::vector<double> cum_weight(mix.types.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < mix.types.size(); ++i) {
    optin[i] = opts_in(s, mix.types[i].prior_null, tau);
    acc += mix.types[i].weight;
    cum_weight[i] = acc;
  }

  Rng rng(seed);
  SimResult res{n, 0, 0, 0, 0, 0.0, seed};
  std::vector<std::uint64_t> approved_by_type(mix.types.size(), 0);
  std::vector<std::uint64_t> false_by_type(mix.types.size(), 0);
  for (std::uint64_t round = 0; round < n; ++round) {
    const double uw = rng.uniform() * acc;
    std::size_t type = 0;
    while (type + 1 < cum_weight.size() && uw > cum_weight[type]) ++type;

    const bool is_null = rng.uniform() < mix.types[type].prior_null;
    if (!optin[type]) continue;
    ++res.n_optin;
    if (is_null) ++res.n_null_optin;

    const double theta = is_null ? 0.0 : gm->theta1;
    const double x = 1.0 - std_normal_cdf(theta + rng.normal());
    // Reward draw, conditionally independent of the evidence given theta.
    const RewardDist& rd = is_null ? s.rewards.null_reward : s.rewards.alt_reward;
    if (const auto* tn = std::get_if<TruncNormalReward>(&rd))
      (void)rng.truncnorm(tn->mu, tn->sigma, tn->support);

    if (x <= tau) {
      ++res.n_approved;
      ++approved_by_type[type];
      if (is_null) {
        ++res.n_false_approved;
        ++false_by_type[type];
      }
    }
  }
  double optin_weight = 0.0;
  for (std::size_t i = 0; i < mix.types.size(); ++i)
    if (optin[i]) optin_weight += mix.types[i].weight;
  if (res.n_approved > 0 && optin_weight > 0.0) {
    for (std::size_t i = 0; i < mix.types.size(); ++i) {
      if (!optin[i] || approved_by_type[i] == 0) continue;
      res.empirical_fdr += (mix.types[i].weight / optin_weight) *
                           static_cast<double>(false_by_type[i]) /
                           static_cast<double>(approved_by_type[i]);
    }
  }
  return res;
}

struct SweepRow {
  double tau;
  double bates_bound;
  double bound_known;
  double bound_conservative;
  double exact_fdr;
  BoundStatus status;
};

// One row per tau combining the bounds and the exact mixture FDR. The Bates
// comparison line uses the alternative mean reward; the conservative bound
// uses kappa = 1.
inline std::vector<SweepRow> sweep(const Scenario& s, const AgentMixture& mix,
                                   const std::vector<double>& tau_grid) {
  const UtilityDeltas deltas = utility_deltas(s);
  const UtilityDeltas deltas_bar = conservative_deltas(s);
  const double r1 = reward_mean(s.rewards, Hypothesis::Alt);

  std::vector<SweepRow> rows;
  rows.reserve(tau_grid.size());
  for (double tau : tau_grid) {
    if (!(tau >= 0.0 && tau <= 1.0))
      throw std::invalid_argument("sweep: tau grid must lie in [0,1]");
    SweepRow row{tau, bates_bound(tau, r1, s.cost).value, 0.0, 0.0, 0.0,
                 BoundStatus::NoOptInRegion};
    if (tau > 0.0) {
      const PowerPair p = power(s.test, tau);
      if (p.beta1 > p.beta0) {
        BoundResult known = fdr_bound_known(p.beta0, p.beta1, deltas);
        row.bound_known = known.value;
        row.status = known.status;
      }
      row.bound_conservative = fdr_bound_conservative(tau, 1.0, deltas_bar).value;
    }
    row.exact_fdr = mixture_fdr(s, mix, tau).fdr;
    rows.push_back(row);
  }
  return rows;
}

struct FdaCell {
  std::string protocol;
  double tau;
  double alt_reward;      // R1, in the table's monetary unit
  double bates;           // tau R1 / c, raw value
  double bound[3];        // conservative bound (kappa = 1) for gamma in {0, 0.35, 0.7}
};

struct FdaConfig {
  double cost = 200.0;      // $M
  double wealth0 = 5000.0;  // $M
  double null_reward = 800.0;
  std::vector<double> alt_rewards = {1000.0, 25000.0, 50000.0};
  std::vector<std::pair<std::string, double>> protocols = {
      {"standard", 0.000625}, {"modernized", 0.005}, {"accelerated", 0.05}};
  std::vector<double> gammas = {0.0, 0.35, 0.7};
};

inline std::vector<FdaCell> fda_table(const FdaConfig& cfg = {}) {
  std::vector<FdaCell> cells;
  for (const auto& [name, tau] : cfg.protocols) {
    for (double r1 : cfg.alt_rewards) {
      FdaCell cell{name, tau, r1, tau * r1 / cfg.cost, {0, 0, 0}};
      for (std::size_t g = 0; g < cfg.gammas.size() && g < 3; ++g) {
        UtilityModel u = cfg.gammas[g] == 0.0 ? UtilityModel::linear()
                                              : UtilityModel::crra(cfg.gammas[g]);
        Scenario s{cfg.wealth0, cfg.cost, u,
                   RewardModel{ConstantReward{cfg.null_reward}, ConstantReward{r1}},
                   GaussianMeanTest{1.0}};
        cell.bound[g] = fdr_bound_conservative(tau, 1.0, conservative_deltas(s)).value;
      }
      cells.push_back(cell);
    }
  }
  return cells;
}

struct StaircasePoint {
  double tau;         // transition threshold of this type
  double prior_null;
  double psi;         // known-beta bound at tau
  double fdr_k;       // exact mixture FDR at tau
};

struct StaircaseReport {
  AgentMixture mixture;
  std::vector<StaircasePoint> points;
  double max_gap;
};

// Ratio construction over evenly spaced priors. Each gap is read just past
// the type's opt-in threshold (nudged by kTransitionNudge), where the new
// type has strictly joined the opt-in population; at the exact transition
// the mixture FDR is a tie-breaking artifact of the discontinuity.
inline constexpr double kTransitionNudge = 2.5e-4;

inline StaircaseReport staircase_report(const Scenario& s, int k,
                                        const Interval& prior_range,
                                        double ratio) {
  if (k < 1) throw std::invalid_argument("staircase_report: K must be >= 1");
  std::vector<double> priors;
  for (int i = 0; i < k; ++i) {
    double p = k == 1 ? prior_range.lo
                      : prior_range.lo + (prior_range.hi - prior_range.lo) * i / (k - 1);
    priors.push_back(p);
  }
  AgentMixture mix =
      k == 1 ? AgentMixture{{{priors[0], 1.0}}} : mixture_from_ratio(s, priors, ratio);

  StaircaseReport rep{mix, {}, 0.0};
  for (const auto& type : mix.types) {
    auto tau = optin_threshold(s, type.prior_null);
    if (!tau) continue;
    const double at = std::min(1.0, *tau + kTransitionNudge);
    StaircasePoint pt{*tau, type.prior_null, fdr_bound_known(s, at).value,
                      mixture_fdr(s, mix, at).fdr};
    rep.max_gap = std::max(rep.max_gap, pt.psi - pt.fdr_k);
    rep.points.push_back(pt);
  }
  return rep;
}

inline const char* to_string(BoundStatus st) {
  switch (st) {
    case BoundStatus::NoOptInRegion: return "no_optin";
    case BoundStatus::Valid: return "valid";
    case BoundStatus::Vacuous: return "vacuous";
  }
  return "?";
}

}  // namespace pat
