// Principal's utility and the maximin-optimal threshold region.
#pragma once

#include <vector>

#include "pat/bounds.hpp"
#include "pat/model.hpp"

namespace pat {

struct PrincipalWeights {
  double omega0;  // harm of approving a null proposal
  double omega1;  // benefit of approving a non-null proposal

  PrincipalWeights(double w0, double w1) : omega0(w0), omega1(w1) {
    if (!(w0 > 0.0 && w1 > 0.0))
      throw std::domain_error("PrincipalWeights: weights must be > 0");
  }

  double target() const { return omega1 / (omega0 + omega1); }
};

// V = (omega0 + omega1) (target - P(null | approve)) for an opted-in agent,
// zero otherwise.
inline double principal_utility(const PrincipalWeights& w, double posterior_null,
                                bool opted_in) {
  if (!(posterior_null >= 0.0 && posterior_null <= 1.0))
    throw std::domain_error("principal_utility: posterior_null must lie in [0,1]");
  if (!opted_in) return 0.0;
  return (w.omega0 + w.omega1) * (w.target() - posterior_null);
}

struct MaximinRegion {
  double tau_max;
  std::vector<double> region;  // grid thresholds that are maximin optimal
};

// Grid scan of the known-beta bound against omega1/(omega0+omega1), with
// bisection refinement at the bracketing boundary. Thresholds where no agent
// can opt in are trivially optimal (worst-case utility is zero).
inline MaximinRegion maximin_region(const Scenario& s, const PrincipalWeights& w,
                                    int grid_points = 10000) {
  if (grid_points < 2)
    throw std::invalid_argument("maximin_region: grid_points must be >= 2");
  const double target = w.target();
  const UtilityDeltas deltas = utility_deltas(s);

  auto optimal = [&](double tau) {
    if (tau <= 0.0) return true;
    // A test with no power gap (tau = 1, or a vanishing mean shift) cannot
    // separate the hypotheses; the worst-case posterior is then the worst
    // opting prior, so such thresholds are never maximin optimal.
    const PowerPair p = power(s.test, tau);
    if (!(p.beta1 > p.beta0)) return false;
    BoundResult b = fdr_bound_known(p.beta0, p.beta1, deltas);
    if (b.status == BoundStatus::NoOptInRegion) return true;
    if (b.status == BoundStatus::Vacuous) return false;
    return b.value <= target;
  };

  MaximinRegion out{0.0, {}};
  double last_in = 0.0, first_out = -1.0;
  for (int i = 0; i <= grid_points; ++i) {
    double tau = static_cast<double>(i) / grid_points;
    if (optimal(tau)) {
      out.region.push_back(tau);
      if (first_out < 0.0) last_in = tau;
    } else if (first_out < 0.0) {
      first_out = tau;
    }
  }
  if (first_out < 0.0) {
    out.tau_max = 1.0;
    return out;
  }

  // Refine the boundary of the first in/out bracket.
  double lo = last_in, hi = first_out;
  while (hi - lo > 1e-9) {
    double mid = 0.5 * (lo + hi);
    if (optimal(mid))
      lo = mid;
    else
      hi = mid;
  }
  out.tau_max = lo;
  return out;
}

}  // namespace pat
