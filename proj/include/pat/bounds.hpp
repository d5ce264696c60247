// Analytic bounds: prior elicitation, sharp known-beta FDR bound, the
// conservative unknown-beta bound, and the prior-work comparison bound.
#pragma once

#include <algorithm>

#include "pat/agent.hpp"
#include "pat/model.hpp"

namespace pat {

enum class BoundStatus { NoOptInRegion, Valid, Vacuous };

// Raw value plus a clamped probability plus a region status. The raw trace is
// kept so sweeps can plot curves through zero-crossing and saturation.
struct BoundResult {
  double value;
  double clamped;
  BoundStatus status;

  static BoundResult classify(double v) {
    BoundStatus st = v < 0.0   ? BoundStatus::NoOptInRegion
                     : v >= 1.0 ? BoundStatus::Vacuous
                                : BoundStatus::Valid;
    return {v, std::clamp(v, 0.0, 1.0), st};
  }
};

namespace detail {

inline void check_denominator(double den, const char* who) {
  if (!(den > 1e-300)) throw std::domain_error(std::string(who) + ": degenerate denominator");
}

}  // namespace detail

// pi0 <= (beta1 D1 - L) / (beta1 D1 - beta0 D0).
inline BoundResult prior_bound_known(double beta0, double beta1,
                                     const UtilityDeltas& d) {
  if (!(beta1 > beta0))
    throw std::invalid_argument("prior_bound_known: requires beta1 > beta0");
  const double den = beta1 * d.delta1 - beta0 * d.delta0;
  detail::check_denominator(den, "prior_bound_known");
  return BoundResult::classify((beta1 * d.delta1 - d.loss) / den);
}

// Envelope form: pi0 <= (kappa D1 - L) / (kappa D1 - tau D0).
inline BoundResult prior_bound_envelope(double tau, double kappa,
                                        const UtilityDeltas& d) {
  if (!(kappa >= tau) || !(kappa > 0.0 && kappa <= 1.0))
    throw std::invalid_argument("prior_bound_envelope: requires tau <= kappa <= 1");
  const double den = kappa * d.delta1 - tau * d.delta0;
  detail::check_denominator(den, "prior_bound_envelope");
  return BoundResult::classify((kappa * d.delta1 - d.loss) / den);
}

// Psi = beta0 (beta1 D1 - L) / ((beta1 - beta0) L + beta0 beta1 (D1 - D0)).
// For beta0 >= L/D0, even the pi0 = 1 agent opts in, so the result is Vacuous.
inline BoundResult fdr_bound_known(double beta0, double beta1,
                                   const UtilityDeltas& d) {
  if (!(beta1 > beta0) || !(beta0 >= 0.0))
    throw std::invalid_argument("fdr_bound_known: requires beta1 > beta0 >= 0");
  const double den = (beta1 - beta0) * d.loss + beta0 * beta1 * (d.delta1 - d.delta0);
  detail::check_denominator(den, "fdr_bound_known");
  BoundResult r = BoundResult::classify(beta0 * (beta1 * d.delta1 - d.loss) / den);
  if (d.delta0 > 0.0 && beta0 * d.delta0 >= d.loss) {
    r.status = BoundStatus::Vacuous;
    r.clamped = 1.0;
  }
  return r;
}

// Unknown-beta form with envelope kappa and deltas built from the supremum
// reward means.
inline BoundResult fdr_bound_conservative(double tau, double kappa,
                                          const UtilityDeltas& deltas_bar) {
  if (!(kappa >= tau) || !(kappa > 0.0 && kappa <= 1.0))
    throw std::invalid_argument("fdr_bound_conservative: requires tau <= kappa <= 1");
  if (tau == 0.0) return BoundResult::classify(0.0);
  const double den = (kappa - tau) * deltas_bar.loss +
                     tau * kappa * (deltas_bar.delta1 - deltas_bar.delta0);
  detail::check_denominator(den, "fdr_bound_conservative");
  BoundResult r = BoundResult::classify(
      tau * (kappa * deltas_bar.delta1 - deltas_bar.loss) / den);
  if (deltas_bar.delta0 > 0.0 && tau * deltas_bar.delta0 >= deltas_bar.loss) {
    r.status = BoundStatus::Vacuous;
    r.clamped = 1.0;
  }
  return r;
}

// tau R / c, the prior-work comparison line.
inline BoundResult bates_bound(double tau, double reward, double cost) {
  if (!(cost > 0.0)) throw std::invalid_argument("bates_bound: cost must be > 0");
  return BoundResult::classify(tau * reward / cost);
}

// Deltas built from reward means, as consumed by fdr_bound_conservative.
inline UtilityDeltas conservative_deltas(const Scenario& s) {
  const double base = s.utility(s.wealth0 - s.cost);
  const double r0 = reward_mean(s.rewards, Hypothesis::Null);
  const double r1 = reward_mean(s.rewards, Hypothesis::Alt);
  return {s.utility(s.wealth0 + r0 - s.cost) - base,
          s.utility(s.wealth0 + r1 - s.cost) - base,
          s.utility(s.wealth0) - base};
}

// Known-beta bound evaluated at a scenario's own power functions. Without a
// power gap (tau = 1, or a degenerate test) the hypotheses are inseparable
// and the bound is vacuous.
inline BoundResult fdr_bound_known(const Scenario& s, double tau) {
  const PowerPair p = power(s.test, tau);
  if (!(p.beta1 > p.beta0)) return {1.0, 1.0, BoundStatus::Vacuous};
  return fdr_bound_known(p.beta0, p.beta1, utility_deltas(s));
}

}  // namespace pat
