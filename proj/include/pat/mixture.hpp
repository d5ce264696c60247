// Exact Bayes FDR for single types and K-mixtures, and the staircase
// constructions that make the known-beta bound tight at chosen thresholds.
#pragma once

#include <numeric>
#include <vector>

#include "pat/agent.hpp"
#include "pat/bounds.hpp"
#include "pat/model.hpp"

namespace pat {

// phi(pi0) = pi0 beta0 / (pi0 (beta0 - beta1) + beta1).
inline double exact_fdr_single(double prior_null, double beta0, double beta1) {
  if (beta0 == 0.0 && beta1 == 0.0)
    throw std::domain_error("exact_fdr_single: undefined posterior (beta0 = beta1 = 0)");
  const double den = prior_null * (beta0 - beta1) + beta1;
  if (!(den > 0.0))
    throw std::domain_error("exact_fdr_single: undefined posterior");
  return prior_null * beta0 / den;
}

struct MixtureFdrTrace {
  double tau;
  double fdr;
  double optin_mass;
  std::vector<std::size_t> optin_types;
};

// FDR_K(tau): weighted average of per-type exact FDR over the opt-in
// population; zero when no type opts in.
inline MixtureFdrTrace mixture_fdr(const Scenario& s, const AgentMixture& mix,
                                   double tau) {
  mix.check();
  const PowerPair p = power(s.test, tau);
  MixtureFdrTrace trace{tau, 0.0, 0.0, {}};
  double weighted_fdr = 0.0;
  for (std::size_t i = 0; i < mix.types.size(); ++i) {
    const auto& t = mix.types[i];
    if (!opts_in(s, t.prior_null, tau)) continue;
    trace.optin_types.push_back(i);
    trace.optin_mass += t.weight;
    weighted_fdr += t.weight * exact_fdr_single(t.prior_null, p.beta0, p.beta1);
  }
  if (trace.optin_mass > 0.0) trace.fdr = weighted_fdr / trace.optin_mass;
  return trace;
}

// The largest prior null still consistent with opting in at tau; makes the
// prior-elicitation bound an equality.
inline double worstcase_prior(const Scenario& s, double tau) {
  const PowerPair p = power(s.test, tau);
  const UtilityDeltas d = utility_deltas(s);
  if (!(p.beta0 > 0.0) || (d.delta0 > 0.0 && p.beta0 * d.delta0 >= d.loss))
    throw std::domain_error("worstcase_prior: tau outside the valid region");
  const BoundResult b = prior_bound_known(p.beta0, p.beta1, d);
  if (b.status != BoundStatus::Valid)
    throw std::domain_error("worstcase_prior: tau outside the valid region");
  return b.clamped;
}

// Mixture with priors worstcase_prior(tau_i) and weights w1 = 1,
// w_i = (sum_{j<i} w_j) (Psi(tau_i) - eps) / eps, renormalized. Guarantees
// Psi(tau_1) = FDR_K(tau_1) and Psi(tau_i) <= FDR_K(tau_i) + eps for i >= 2.
inline AgentMixture staircase_mixture(const Scenario& s,
                                      const std::vector<double>& thresholds,
                                      double epsilon) {
  if (thresholds.empty())
    throw std::invalid_argument("staircase_mixture: needs at least one threshold");
  if (!(epsilon > 0.0))
    throw std::invalid_argument("staircase_mixture: epsilon must be > 0");
  for (std::size_t i = 1; i < thresholds.size(); ++i)
    if (!(thresholds[i] > thresholds[i - 1]))
      throw std::invalid_argument("staircase_mixture: thresholds must increase");

  std::vector<double> priors, psi;
  for (double tau : thresholds) {
    priors.push_back(worstcase_prior(s, tau));
    psi.push_back(fdr_bound_known(s, tau).value);
  }
  for (double v : psi)
    if (!(epsilon < v))
      throw std::invalid_argument("staircase_mixture: epsilon >= Psi(tau_i), infeasible");

  // Unnormalized recursion, one final normalization.
  std::vector<double> w{1.0};
  double partial = 1.0;
  for (std::size_t i = 1; i < thresholds.size(); ++i) {
    w.push_back(partial * (psi[i] - epsilon) / epsilon);
    partial += w.back();
  }
  AgentMixture mix;
  for (std::size_t i = 0; i < w.size(); ++i)
    mix.types.push_back({priors[i], w[i] / partial});
  return mix;
}

// Weights satisfying w_j / sum_{i<=j} w_i = ratio for j >= 2, priors as given.
inline AgentMixture mixture_from_ratio(const Scenario& s,
                                       const std::vector<double>& priors,
                                       double ratio) {
  (void)s;
  if (priors.empty())
    throw std::invalid_argument("mixture_from_ratio: needs at least one prior");
  if (!(ratio > 0.0 && ratio < 1.0))
    throw std::invalid_argument("mixture_from_ratio: ratio must lie in (0,1)");
  for (std::size_t i = 1; i < priors.size(); ++i)
    if (!(priors[i] > priors[i - 1]))
      throw std::invalid_argument("mixture_from_ratio: priors must increase");

  std::vector<double> w{1.0};
  double partial = 1.0;
  for (std::size_t i = 1; i < priors.size(); ++i) {
    w.push_back(ratio * partial / (1.0 - ratio));
    partial += w.back();
  }
  AgentMixture mix;
  for (std::size_t i = 0; i < w.size(); ++i)
    mix.types.push_back({priors[i], w[i] / partial});
  return mix;
}

}  // namespace pat
