// Shared fixtures for the test suite.
#pragma once

#include "pat/model.hpp"

namespace pat::testing {

// W0 = 20, c = 10, linear utility, constant reward 25, Gaussian mean shift 1.
inline Scenario baseline_scenario() {
  return Scenario{20.0, 10.0, UtilityModel::linear(),
                  RewardModel{ConstantReward{25.0}, ConstantReward{25.0}},
                  GaussianMeanTest{1.0}};
}

inline Scenario with_utility(Scenario s, UtilityModel u) {
  s.utility = u;
  return s;
}

inline Scenario with_rewards(Scenario s, RewardDist null_r, RewardDist alt_r) {
  s.rewards = RewardModel{std::move(null_r), std::move(alt_r)};
  return s;
}

// Deterministic 50/150 rewards, as in the reward-stochasticity comparison.
inline RewardModel deterministic_rewards() {
  return {ConstantReward{50.0}, ConstantReward{150.0}};
}

inline RewardModel slightly_stochastic_rewards() {
  return {TruncNormalReward{50.0, 25.0, Interval(20.0, 80.0)},
          TruncNormalReward{150.0, 25.0, Interval(120.0, 180.0)}};
}

inline RewardModel highly_stochastic_rewards() {
  return {TruncNormalReward{50.0, 35.0, Interval(0.0, 100.0)},
          TruncNormalReward{150.0, 35.0, Interval(100.0, 200.0)}};
}

}  // namespace pat::testing
