// Command-line front end: seeded experiment runs, four-rule sweeps, oracle
// verification and bound-curve emission.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "colearn/bounds.hpp"
#include "colearn/error.hpp"
#include "colearn/harness.hpp"
#include "colearn/oracle.hpp"
#include "colearn/serialize.hpp"

namespace {

using namespace colearn;

struct CliOptions {
  std::string config_path;
  std::string domain_name;
  std::string algo = "csper";
  std::uint64_t seed = 0;
  int rounds = 0;
  int runs = 0;
  std::string out = "colearn_out";
  bool enforce = false;
  bool no_enforce = false;
  std::string budget;
  bool noisy = false;
  bool strict = false;
  double kappa = 0.0;
  int visible_dim = 0;
};

DomainConfig default_domain(DomainKind kind) {
  DomainConfig config;
  config.kind = kind;
  config.kappa = 0.1;
  switch (kind) {
    case DomainKind::PathPlanning:
      config.cube_dim = 7;
      config.visible_dim = 10;
      break;
    case DomainKind::Tsp:
      config.num_points = 20;
      config.visible_dim = 100;
      break;
    case DomainKind::MultiTsp:
      config.num_points = 40;
      config.num_salespersons = 4;
      config.visible_dim = 10;
      break;
    case DomainKind::Ranking:
      config.list_length = 20;
      config.visible_dim = 30;
      break;
  }
  return config;
}

std::pair<int, int> parse_budget(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw ConfigError("budget must be lo:hi, got '" + text + "'");
  return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
}

ExperimentConfig build_config(const CliOptions& opts, const CLI::App& cmd) {
  ExperimentConfig config;
  if (!opts.config_path.empty()) {
    config = load_experiment_config(opts.config_path);
  } else {
    const std::string name = opts.domain_name.empty() ? "tsp" : opts.domain_name;
    const auto kind = parse_domain_kind(name);
    if (!kind) throw ConfigError("unknown domain '" + name + "'");
    config.domain = default_domain(*kind);
    config.rounds = *kind == DomainKind::Ranking ? 1000 : 500;
  }
  if (!opts.config_path.empty() && !opts.domain_name.empty())
    throw ConfigError("--config and --domain are mutually exclusive");

  if (const char* env_seed = std::getenv("COLEARN_SEED"))
    config.master_seed = std::strtoull(env_seed, nullptr, 10);
  if (cmd.count("--seed")) config.master_seed = opts.seed;
  if (cmd.count("--algo")) {
    const auto rule = parse_rule(opts.algo);
    if (!rule && opts.algo != "expert")
      throw CLI::ValidationError("--algo", "unknown algorithm '" + opts.algo + "'");
    if (rule) config.rule = *rule;
    config.expert_baseline = !rule;
  }
  if (cmd.count("--rounds")) config.rounds = opts.rounds;
  if (cmd.count("--runs")) config.runs = opts.runs;
  if (cmd.count("--enforce")) config.enforce_local_optimality = true;
  if (cmd.count("--no-enforce")) config.enforce_local_optimality = false;
  if (cmd.count("--budget")) config.budget_range = parse_budget(opts.budget);
  if (cmd.count("--noisy") && config.domain.hidden_dim == 0) config.domain.hidden_dim = 1;
  if (cmd.count("--strict")) config.strict = true;
  if (cmd.count("--kappa")) config.domain.kappa = opts.kappa;
  if (cmd.count("--dim")) config.domain.visible_dim = opts.visible_dim;
  return config;
}

// Runs one experiment config and writes per-run CSVs plus a combined JSON.
// Returns false on a bound violation in strict mode.
bool run_and_emit(const ExperimentConfig& config, const std::string& stem, bool quiet,
                  AggregateCurves* curves_out) {
  const bool noisy = config.domain.hidden_dim > 0;
  const std::vector<RunLog> logs = run_all(config);
  std::vector<std::optional<BoundReport>> reports;
  bool all_satisfied = true;
  for (const RunLog& log : logs) {
    reports.push_back(applicable_bound_report(log, noisy));
    if (reports.back() && !reports.back()->all_satisfied) all_satisfied = false;
  }
  for (std::size_t r = 0; r < logs.size(); ++r)
    write_run_csv(stem + "_run" + std::to_string(r) + ".csv", logs[r], reports[r]);
  write_results_json(stem + ".json", config, logs, reports);
  if (curves_out) *curves_out = aggregate_runs(logs);
  if (!quiet)
    std::cout << "wrote " << logs.size() << " run(s) to " << stem << "_run*.csv and " << stem
              << ".json\n";
  if (config.strict && !all_satisfied) {
    std::cerr << "error: cost bound violated in at least one run (strict mode)\n";
    return false;
  }
  return true;
}

int cmd_run(const CliOptions& opts, const CLI::App& cmd) {
  const ExperimentConfig config = build_config(opts, cmd);
  return run_and_emit(config, opts.out, false, nullptr) ? 0 : 1;
}

int cmd_sweep(const CliOptions& opts, const CLI::App& cmd) {
  ExperimentConfig config = build_config(opts, cmd);
  std::vector<std::pair<std::string, ExperimentConfig>> jobs;
  for (UpdateRule rule : {UpdateRule::Per, UpdateRule::CsPer, UpdateRule::Pa, UpdateRule::CsPa}) {
    ExperimentConfig job = config;
    job.rule = rule;
    job.expert_baseline = false;
    jobs.emplace_back(to_string(rule), job);
  }
  if (!config.enforce_local_optimality) {
    // Fixed-weight baseline under the true visible weights.
    ExperimentConfig job = config;
    job.expert_baseline = true;
    jobs.emplace_back("expert", job);
  }
  bool ok = true;
  for (auto& [name, job] : jobs) {
    AggregateCurves curves;
    const std::string stem = opts.out + "_" + name;
    ok = run_and_emit(job, stem, true, &curves) && ok;
    write_plot_data(stem + ".dat", curves);
    std::cout << name << ": final avg reported cost "
              << curves.mean_avg_cost_reported.back() << " (plot " << stem << ".dat)\n";
  }
  return ok ? 0 : 1;
}

int cmd_verify(const CliOptions& opts, const CLI::App& cmd) {
  const int weight_trials = 20;
  nlohmann::json report;
  report["checks"] = nlohmann::json::array();
  bool all_ok = true;

  std::vector<DomainConfig> configs;
  {
    DomainConfig cube = default_domain(DomainKind::PathPlanning);
    cube.cube_dim = 4;
    configs.push_back(cube);
    DomainConfig tsp = default_domain(DomainKind::Tsp);
    tsp.num_points = 6;
    tsp.visible_dim = 10;
    configs.push_back(tsp);
    DomainConfig mtsp = default_domain(DomainKind::MultiTsp);
    mtsp.num_points = 7;
    mtsp.num_salespersons = 2;
    configs.push_back(mtsp);
    DomainConfig rank = default_domain(DomainKind::Ranking);
    rank.list_length = 5;
    rank.visible_dim = 6;
    configs.push_back(rank);
  }

  std::uint64_t seed = 17;
  if (const char* env_seed = std::getenv("COLEARN_SEED"))
    seed = std::strtoull(env_seed, nullptr, 10);
  if (cmd.count("--seed")) seed = opts.seed;

  for (const DomainConfig& domain_config : configs) {
    const auto domain = make_domain(domain_config);
    Rng rng(seed);
    const TrueModel truth = draw_true_model(domain_config, rng);
    int certified = 0, traces_ok = 0, optima_checked = 0;
    bool ok = true;
    for (int trial = 0; trial < weight_trials; ++trial) {
      const Instance inst = domain->generate_instance(truth, rng);
      WeightVec w(domain_config.visible_dim);
      for (double& x : w) x = 2.0 * uniform01(rng) - 1.0;
      Solution sol = domain->solve(inst, w);
      sol = local_search(*domain, inst, sol, w, 0.0);
      if (certify_local_optimum(*domain, inst, sol, w, 0.0))
        ++certified;
      else
        ok = false;
      const ImprovementTrace trace =
          expert_improve(*domain, inst, sol, truth.w_star_full, domain_config.kappa);
      if (domain_config.kind == DomainKind::Ranking ||
          validate_trace(*domain, inst, trace, truth.w_star_full, domain_config.kappa))
        ++traces_ok;
      else
        ok = false;
      // Local never beats global on these enumerable sizes.
      const Solution best = global_optimum(*domain, inst, w);
      if (solution_utility(*domain, inst, sol, w) <=
          solution_utility(*domain, inst, best, w) + 1e-9)
        ++optima_checked;
      else
        ok = false;
    }
    report["checks"].push_back({{"domain", to_string(domain_config.kind)},
                                {"weight_trials", weight_trials},
                                {"local_optima_certified", certified},
                                {"traces_validated", traces_ok},
                                {"global_dominance_checked", optima_checked},
                                {"ok", ok}});
    all_ok = all_ok && ok;
    std::cout << to_string(domain_config.kind) << ": " << (ok ? "ok" : "FAILED") << " ("
              << certified << "/" << weight_trials << " local optima certified)\n";
  }
  report["ok"] = all_ok;
  const std::string path = opts.out + "_verify.json";
  std::ofstream out(path);
  if (!out) throw IoError("verify: cannot open " + path);
  out << report.dump(2) << '\n';
  std::cout << "report written to " << path << "\n";
  return all_ok ? 0 : 1;
}

struct BoundsOptions {
  std::string rule = "per";
  double feature_bound = 1.0;
  double w_star_norm = 1.0;
  double kappa = 0.1;
  int rounds = 100;
  bool noisy = false;
  double xi_sum = 0.0;
  double xi_cost_sum = 0.0;
  std::string out = "bounds.dat";
};

int cmd_bounds(const BoundsOptions& opts) {
  const auto rule = parse_rule(opts.rule);
  if (!rule) throw ConfigError("unknown rule '" + opts.rule + "'");
  if (opts.rounds < 1) throw ConfigError("bounds: --rounds must be at least 1");
  std::ofstream out(opts.out);
  if (!out) throw IoError("bounds: cannot open " + opts.out);
  for (int t = 1; t <= opts.rounds; ++t) {
    BoundInputs inputs;
    inputs.feature_bound = opts.feature_bound;
    inputs.w_star_norm = opts.w_star_norm;
    inputs.kappa = opts.kappa;
    inputs.rounds = t;
    // Standalone curves accrue the given slack totals uniformly over rounds.
    inputs.xi_sum = opts.xi_sum * t / opts.rounds;
    inputs.xi_cost_sum = opts.xi_cost_sum * t / opts.rounds;
    const double value =
        opts.noisy ? noisy_bound(*rule, inputs) : realizable_bound(*rule, inputs);
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    out << t << ' ' << buffer << '\n';
  }
  std::cout << "wrote " << opts.rounds << " bound values to " << opts.out << "\n";
  return 0;
}

void add_common_options(CLI::App* cmd, CliOptions& opts) {
  cmd->add_option("--config", opts.config_path, "experiment config JSON file");
  cmd->add_option("--domain", opts.domain_name,
                  "domain preset: path_planning|tsp|multi_tsp|ranking");
  cmd->add_option("--algo", opts.algo, "update rule: per|csper|pa|cspa|expert");
  cmd->add_option("--seed", opts.seed, "master seed (also via COLEARN_SEED)");
  cmd->add_option("--rounds", opts.rounds, "rounds per run (T)");
  cmd->add_option("--runs", opts.runs, "number of seeded runs");
  cmd->add_option("--out", opts.out, "output path stem");
  cmd->add_flag("--enforce", opts.enforce, "post-optimize so that presented solutions are locally optimal");
  cmd->add_flag("--no-enforce", opts.no_enforce, "use the raw solvers");
  cmd->add_option("--budget", opts.budget, "expert budget range lo:hi");
  cmd->add_flag("--noisy", opts.noisy, "hide one feature dimension from the learner");
  cmd->add_flag("--strict", opts.strict, "nonzero exit on any bound violation");
  cmd->add_option("--kappa", opts.kappa, "minimum expert improvement per operator");
  cmd->add_option("--dim", opts.visible_dim, "visible feature dimension");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coactive learning experiment harness"};
  app.require_subcommand(1);

  CliOptions run_opts, sweep_opts, verify_opts;
  BoundsOptions bounds_opts;

  CLI::App* run_cmd = app.add_subcommand("run", "run one experiment config");
  add_common_options(run_cmd, run_opts);

  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "run all four update rules on one config");
  add_common_options(sweep_cmd, sweep_opts);

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "brute-force certification on small instances");
  verify_cmd->add_option("--seed", verify_opts.seed, "certification seed");
  verify_cmd->add_option("--out", verify_opts.out, "report path stem");

  CLI::App* bounds_cmd = app.add_subcommand("bounds", "emit bound curves for given inputs");
  bounds_cmd->add_option("--rule", bounds_opts.rule, "per|csper|pa|cspa");
  bounds_cmd->add_option("--feature-bound", bounds_opts.feature_bound, "R");
  bounds_cmd->add_option("--wstar-norm", bounds_opts.w_star_norm, "|w*|");
  bounds_cmd->add_option("--kappa", bounds_opts.kappa, "kappa");
  bounds_cmd->add_option("--rounds", bounds_opts.rounds, "horizon T");
  bounds_cmd->add_flag("--noisy", bounds_opts.noisy, "use the noisy-setting formulas");
  bounds_cmd->add_option("--xi-sum", bounds_opts.xi_sum, "total slack sum");
  bounds_cmd->add_option("--xi-cost-sum", bounds_opts.xi_cost_sum, "total slack*cost sum");
  bounds_cmd->add_option("--out", bounds_opts.out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help() << "\n";
    return 2;
  }

  try {
    if (run_cmd->parsed()) return cmd_run(run_opts, *run_cmd);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_opts, *sweep_cmd);
    if (verify_cmd->parsed()) return cmd_verify(verify_opts, *verify_cmd);
    if (bounds_cmd->parsed()) return cmd_bounds(bounds_opts);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
