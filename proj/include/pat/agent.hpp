// Agent-side calculus: utility differences, expected opt-in utility as a
// linear function of the prior null, the opt-in decision, and its inverse.
#pragma once

#include <optional>

#include "pat/math.hpp"
#include "pat/model.hpp"

namespace pat {

// Delta_j = E[u(W0 + R - c) | Theta_j] - u(W0 - c);  L = u(W0) - u(W0 - c).
struct UtilityDeltas {
  double delta0;
  double delta1;
  double loss;
};

namespace detail {

inline double expected_utility_gain(const Scenario& s, const RewardDist& d) {
  const double base = s.utility(s.wealth0 - s.cost);
  if (const auto* c = std::get_if<ConstantReward>(&d))
    return s.utility(s.wealth0 + c->value - s.cost) - base;
  const auto& tn = std::get<TruncNormalReward>(d);
  double eu = truncnorm_expect(
      [&](double r) { return s.utility(s.wealth0 + r - s.cost); }, tn.mu,
      tn.sigma, tn.support);
  return eu - base;
}

}  // namespace detail

inline UtilityDeltas utility_deltas(const Scenario& s) {
  return {detail::expected_utility_gain(s, s.rewards.null_reward),
          detail::expected_utility_gain(s, s.rewards.alt_reward),
          s.utility(s.wealth0) - s.utility(s.wealth0 - s.cost)};
}

// ell(pi0) = pi0 [beta0 D0 - beta1 D1] + [u(W0 - c) + beta1 D1], linear in
// pi0 with negative slope whenever beta1 > beta0 > 0.
inline double expected_optin_utility(const Scenario& s, double prior_null,
                                     double tau) {
  if (!(prior_null >= 0.0 && prior_null <= 1.0))
    throw std::domain_error("expected_optin_utility: prior_null must lie in [0,1]");
  const UtilityDeltas d = utility_deltas(s);
  const PowerPair p = power(s.test, tau);
  return prior_null * (p.beta0 * d.delta0 - p.beta1 * d.delta1) +
         s.utility(s.wealth0 - s.cost) + p.beta1 * d.delta1;
}

// Opt in iff ell(pi0) >= u(W0); ties opt in.
inline bool opts_in(const Scenario& s, double prior_null, double tau) {
  return expected_optin_utility(s, prior_null, tau) >= s.utility(s.wealth0);
}

// Smallest tau with opts_in true, to 1e-8; nullopt if even tau = 1 fails.
inline std::optional<double> optin_threshold(const Scenario& s,
                                             double prior_null) {
  if (!opts_in(s, prior_null, 1.0)) return std::nullopt;
  if (opts_in(s, prior_null, 0.0)) return 0.0;
  // ell is non-decreasing in tau, so the margin brackets a sign change.
  auto f = [&](double tau) {
    return expected_optin_utility(s, prior_null, tau) - s.utility(s.wealth0);
  };
  double lo = 0.0, hi = 1.0;
  while (hi - lo > 1e-8) {
    double mid = 0.5 * (lo + hi);
    if (f(mid) >= 0.0)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

}  // namespace pat
