// Command-line front end: threshold sweeps, Monte-Carlo simulation, staircase
// reports, maximin regions, the FDA protocol table, and scenario validation.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "pat/pat.hpp"

namespace {

std::vector<double> make_grid(double lo, double hi, int steps) {
  std::vector<double> grid;
  for (int i = 0; i <= steps; ++i)
    grid.push_back(lo + (hi - lo) * i / steps);
  return grid;
}

std::ostream& open_out(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::invalid_argument("cannot open output file '" + path + "'");
  return file;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Principal-agent hypothesis testing: Bayes-FDR bounds, "
               "mixtures, maximin thresholds, and a Monte-Carlo oracle"};
  app.require_subcommand(1);

  std::string config_path, out_path;
  double tau_min = 0.0, tau_max = 0.4, epsilon = 1e-3;
  int tau_steps = 200, k = 20;
  std::uint64_t n = 1000000, seed = 0;
  double tau = 0.2, omega0 = 1.0, omega1 = 1.0;
  double prior_lo = 0.02, prior_hi = 0.97, ratio = 0.99;

  auto* sweep_cmd = app.add_subcommand("sweep", "Bounds and exact FDR over a tau grid (CSV)");
  sweep_cmd->add_option("--config", config_path, "scenario/mixture JSON")->required();
  sweep_cmd->add_option("--tau-min", tau_min);
  sweep_cmd->add_option("--tau-max", tau_max);
  sweep_cmd->add_option("--tau-steps", tau_steps);
  sweep_cmd->add_option("--out", out_path, "CSV output path (default stdout)");

  auto* sim_cmd = app.add_subcommand("simulate", "Monte-Carlo oracle for one threshold");
  sim_cmd->add_option("--config", config_path)->required();
  sim_cmd->add_option("--tau", tau);
  sim_cmd->add_option("--n", n);
  sim_cmd->add_option("--seed", seed);

  auto* stair_cmd = app.add_subcommand("staircase", "Staircase-sharpness report");
  stair_cmd->add_option("--config", config_path)->required();
  stair_cmd->add_option("--k", k, "number of agent types");
  stair_cmd->add_option("--prior-min", prior_lo);
  stair_cmd->add_option("--prior-max", prior_hi);
  stair_cmd->add_option("--ratio", ratio, "opt-in proportion of the newest type");
  stair_cmd->add_option("--epsilon", epsilon, "use the weight recursion with this epsilon instead of the ratio construction")->default_val(0.0);

  auto* max_cmd = app.add_subcommand("maximin", "Maximin-optimal threshold region");
  max_cmd->add_option("--config", config_path)->required();
  max_cmd->add_option("--omega0", omega0, "harm weight for approving a null");
  max_cmd->add_option("--omega1", omega1, "benefit weight for approving a non-null");
  max_cmd->add_option("--tau-steps", tau_steps)->default_val(10000);

  auto* fda_cmd = app.add_subcommand("fda-table", "FDA protocol table (CSV)");
  fda_cmd->add_option("--out", out_path);

  auto* val_cmd = app.add_subcommand("validate", "Check scenario assumptions");
  val_cmd->add_option("--config", config_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (*sweep_cmd) {
      auto [scenario, mixture] = pat::load_config(config_path);
      auto rows = pat::sweep(scenario, mixture, make_grid(tau_min, tau_max, tau_steps));
      std::ofstream file;
      pat::write_sweep_csv(open_out(out_path, file), rows);
    } else if (*sim_cmd) {
      auto [scenario, mixture] = pat::load_config(config_path);
      auto res = pat::simulate(scenario, mixture, tau, n, seed);
      auto analytic = pat::mixture_fdr(scenario, mixture, tau);
      std::printf("n_rounds,n_optin,n_approved,n_false_approved,empirical_fdr,analytic_fdr,seed\n");
      std::printf("%llu,%llu,%llu,%llu,%.10g,%.10g,%llu\n",
                  (unsigned long long)res.n_rounds, (unsigned long long)res.n_optin,
                  (unsigned long long)res.n_approved,
                  (unsigned long long)res.n_false_approved, res.empirical_fdr,
                  analytic.fdr, (unsigned long long)res.seed);
    } else if (*stair_cmd) {
      auto [scenario, mixture] = pat::load_config(config_path);
      if (epsilon > 0.0) {
        // Weight-recursion construction at the types' transition thresholds.
        std::vector<double> priors;
        for (int i = 0; i < k; ++i)
          priors.push_back(k == 1 ? prior_lo
                                  : prior_lo + (prior_hi - prior_lo) * i / (k - 1));
        std::vector<double> thresholds;
        for (double p : priors) {
          auto t = pat::optin_threshold(scenario, p);
          if (t) thresholds.push_back(*t);
        }
        auto mix = pat::staircase_mixture(scenario, thresholds, epsilon);
        std::printf("tau,prior_null,weight,psi,fdr_k,gap\n");
        for (std::size_t i = 0; i < thresholds.size(); ++i) {
          double psi = pat::fdr_bound_known(scenario, thresholds[i]).value;
          double fdrk = pat::mixture_fdr(scenario, mix, thresholds[i]).fdr;
          std::printf("%.10g,%.10g,%.10g,%.10g,%.10g,%.10g\n", thresholds[i],
                      mix.types[i].prior_null, mix.types[i].weight, psi, fdrk,
                      psi - fdrk);
        }
      } else {
        auto rep = pat::staircase_report(scenario, k, pat::Interval(prior_lo, prior_hi), ratio);
        std::printf("tau,prior_null,psi,fdr_k,gap\n");
        for (const auto& pt : rep.points)
          std::printf("%.10g,%.10g,%.10g,%.10g,%.10g\n", pt.tau, pt.prior_null,
                      pt.psi, pt.fdr_k, pt.psi - pt.fdr_k);
        std::printf("# max_gap %.10g\n", rep.max_gap);
      }
    } else if (*max_cmd) {
      auto [scenario, mixture] = pat::load_config(config_path);
      auto region = pat::maximin_region(scenario, pat::PrincipalWeights(omega0, omega1),
                                        tau_steps);
      std::printf("tau_max,%.10g\n", region.tau_max);
      std::printf("region_points,%zu\n", region.region.size());
    } else if (*fda_cmd) {
      std::ofstream file;
      std::ostream& out = open_out(out_path, file);
      out << "protocol,tau,alt_reward,bates_pct,neutral_pct,slight_pct,high_pct\n";
      auto pct = [](double v) {
        char buf[32];
        if (v >= 1.0) return std::string("n/a");
        std::snprintf(buf, sizeof buf, "%.10g", v * 100.0);
        return std::string(buf);
      };
      for (const auto& cell : pat::fda_table()) {
        char head[128];
        std::snprintf(head, sizeof head, "%s,%.10g,%.10g,", cell.protocol.c_str(),
                      cell.tau, cell.alt_reward);
        out << head << pct(cell.bates) << ',' << pct(cell.bound[0]) << ','
            << pct(cell.bound[1]) << ',' << pct(cell.bound[2]) << '\n';
      }
    } else if (*val_cmd) {
      auto [scenario, mixture] = pat::load_config(config_path);
      auto rep = pat::validate(scenario);
      for (const auto& c : rep.checks)
        std::printf("%-24s %s  %s\n", c.name.c_str(), c.passed ? "pass" : "FAIL",
                    c.detail.c_str());
      if (!rep.ok()) return 1;
    }
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
