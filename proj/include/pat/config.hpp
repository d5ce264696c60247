// JSON config parsing/serialization for scenarios and agent mixtures, plus
// CSV emission for sweep results.
#pragma once

#include <fstream>
#include <ostream>
#include <string>

#include <json.hpp>

#include "pat/harness.hpp"
#include "pat/model.hpp"

namespace pat {

using json = nlohmann::json;

namespace detail {

inline RewardDist parse_reward_dist(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "constant") return ConstantReward{j.at("value").get<double>()};
  if (kind == "truncnormal") {
    const auto& sup = j.at("support");
    return TruncNormalReward{j.at("mu").get<double>(), j.at("sigma").get<double>(),
                             Interval(sup.at(0).get<double>(), sup.at(1).get<double>())};
  }
  throw std::invalid_argument("config: unknown reward kind '" + kind + "'");
}

inline json reward_dist_to_json(const RewardDist& d) {
  if (const auto* c = std::get_if<ConstantReward>(&d))
    return {{"kind", "constant"}, {"value", c->value}};
  const auto& tn = std::get<TruncNormalReward>(d);
  return {{"kind", "truncnormal"},
          {"mu", tn.mu},
          {"sigma", tn.sigma},
          {"support", {tn.support.lo, tn.support.hi}}};
}

}  // namespace detail

inline Scenario scenario_from_json(const json& j) {
  const json& sc = j.at("scenario");

  const json& ju = sc.at("utility");
  const std::string ukind = ju.at("kind").get<std::string>();
  UtilityModel u = UtilityModel::linear();
  if (ukind == "linear")
    u = UtilityModel::linear();
  else if (ukind == "log")
    u = UtilityModel::log();
  else if (ukind == "crra")
    u = UtilityModel::crra(ju.at("gamma").get<double>());
  else
    throw std::invalid_argument("config: unknown utility kind '" + ukind + "'");

  const json& jr = sc.at("rewards");
  RewardModel rewards{detail::parse_reward_dist(jr.at("null")),
                      detail::parse_reward_dist(jr.at("alt"))};

  const json& jt = sc.at("test");
  const std::string tkind = jt.at("kind").get<std::string>();
  if (tkind != "gaussian_mean")
    throw std::invalid_argument("config: unknown test kind '" + tkind + "'");
  TestModel test = GaussianMeanTest{jt.at("theta1").get<double>()};

  return Scenario{sc.at("wealth0").get<double>(), sc.at("cost").get<double>(), u,
                  rewards, test};
}

inline AgentMixture mixture_from_json(const json& j) {
  AgentMixture mix;
  for (const auto& t : j.at("mixture").at("types"))
    mix.types.push_back(
        {t.at("prior_null").get<double>(), t.at("weight").get<double>()});
  mix.check();
  return mix;
}

inline json to_json(const Scenario& s, const AgentMixture& mix) {
  json ju;
  switch (s.utility.kind()) {
    case UtilityModel::Kind::Linear: ju = {{"kind", "linear"}}; break;
    case UtilityModel::Kind::Log: ju = {{"kind", "log"}}; break;
    case UtilityModel::Kind::Crra:
      ju = {{"kind", "crra"}, {"gamma", s.utility.gamma()}};
      break;
  }
  json types = json::array();
  for (const auto& t : mix.types)
    types.push_back({{"prior_null", t.prior_null}, {"weight", t.weight}});
  return {{"scenario",
           {{"wealth0", s.wealth0},
            {"cost", s.cost},
            {"utility", ju},
            {"rewards",
             {{"null", detail::reward_dist_to_json(s.rewards.null_reward)},
              {"alt", detail::reward_dist_to_json(s.rewards.alt_reward)}}},
            {"test",
             {{"kind", "gaussian_mean"},
              {"theta1", std::get<GaussianMeanTest>(s.test).theta1}}}}},
          {"mixture", {{"types", types}}}};
}

inline std::pair<Scenario, AgentMixture> load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
  json j = json::parse(in);
  return {scenario_from_json(j), mixture_from_json(j)};
}

// Header row, fixed column order, 10 significant digits, '.' decimal
// separator, newline-terminated.
inline void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "tau,bates_bound,bound_known,bound_conservative,exact_fdr,status\n";
  char buf[64];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return std::string(buf);
  };
  for (const auto& r : rows)
    out << num(r.tau) << ',' << num(r.bates_bound) << ',' << num(r.bound_known)
        << ',' << num(r.bound_conservative) << ',' << num(r.exact_fdr) << ','
        << to_string(r.status) << '\n';
}

}  // namespace pat
