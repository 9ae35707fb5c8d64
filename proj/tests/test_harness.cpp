#include "colearn/harness.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "colearn/error.hpp"
#include "colearn/serialize.hpp"
#include "doctest.h"

using namespace colearn;

namespace {

ExperimentConfig small_tsp_experiment() {
  ExperimentConfig config;
  config.domain.kind = DomainKind::Tsp;
  config.domain.visible_dim = 6;
  config.domain.hidden_dim = 0;
  config.domain.kappa = 0.1;
  config.domain.num_points = 6;
  config.rule = UpdateRule::CsPer;
  config.rounds = 40;
  config.runs = 2;
  config.enforce_local_optimality = true;
  config.master_seed = 7;
  return config;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

RunLog constant_cost_log(int rounds, int cost) {
  RunLog log;
  long long cum = 0, cum_sq = 0;
  for (int t = 0; t < rounds; ++t) {
    RunRow row;
    row.t = t;
    row.cost_reported = cost;
    row.cost_update = cost;
    cum += cost;
    cum_sq += static_cast<long long>(cost) * cost;
    row.cum_cost_reported = cum;
    row.cum_cost_update = cum;
    row.cum_sq_cost_update = cum_sq;
    log.rows.push_back(row);
  }
  return log;
}

}  // namespace

TEST_CASE("runs are deterministic functions of (config, seed)") {
  const ExperimentConfig config = small_tsp_experiment();
  const RunLog a = run_experiment(config, 0);
  const RunLog b = run_experiment(config, 0);
  CHECK(a == b);
  const RunLog c = run_experiment(config, 1);
  CHECK(a.run_seed != c.run_seed);
  CHECK(a != c);
}

TEST_CASE("first round updates from zero weights unless the expert is silent") {
  const ExperimentConfig config = small_tsp_experiment();
  const RunLog log = run_experiment(config, 0);
  const RunRow& first = log.rows.front();
  if (first.cost_update > 0)
    CHECK(first.lambda != 0.0);
  else
    CHECK(first.weight_norm == 0.0);
}

TEST_CASE("cumulative columns are consistent prefix sums") {
  const ExperimentConfig config = small_tsp_experiment();
  const RunLog log = run_experiment(config, 0);
  long long cum_r = 0, cum_u = 0, cum_sq = 0;
  for (const RunRow& row : log.rows) {
    CHECK(row.cost_reported >= 0);
    CHECK(row.cost_update >= 0);
    CHECK(row.cost_update <= row.cost_reported);
    cum_r += row.cost_reported;
    cum_u += row.cost_update;
    cum_sq += static_cast<long long>(row.cost_update) * row.cost_update;
    CHECK(row.cum_cost_reported == cum_r);
    CHECK(row.cum_cost_update == cum_u);
    CHECK(row.cum_sq_cost_update == cum_sq);
    // Integer costs: the squared average dominates the plain average.
    CHECK(static_cast<double>(row.cum_sq_cost_update) >=
          static_cast<double>(row.cum_cost_update));
  }
}

TEST_CASE("csper cumulative squared cost respects the constant cap") {
  const ExperimentConfig config = small_tsp_experiment();
  for (int run = 0; run < 3; ++run) {
    const RunLog log = run_experiment(config, run);
    const double cap = 4.0 * log.feature_bound * log.feature_bound * log.w_star_visible_norm *
                       log.w_star_visible_norm / (log.kappa * log.kappa);
    for (const RunRow& row : log.rows)
      CHECK(static_cast<double>(row.cum_sq_cost_update) <= cap + 1e-9);
    const BoundReport report = check_run(log, bound_inputs_for(log), false);
    CHECK(report.all_satisfied);
    CHECK(report.csper_constant_ok);
  }
}

TEST_CASE("budgets cap every reported cost") {
  ExperimentConfig config = small_tsp_experiment();
  config.budget_range = std::make_pair(2, 5);
  const RunLog log = run_experiment(config, 0);
  for (const RunRow& row : log.rows) CHECK(row.cost_reported <= 5);
}

TEST_CASE("expert baseline keeps the true visible weights fixed") {
  ExperimentConfig config = small_tsp_experiment();
  config.expert_baseline = true;
  const RunLog log = run_experiment(config, 0);
  for (const RunRow& row : log.rows) {
    CHECK(row.lambda == 0.0);
    CHECK(row.weight_norm == doctest::Approx(log.w_star_visible_norm));
  }
}

TEST_CASE("config validation rejects malformed experiments") {
  ExperimentConfig config = small_tsp_experiment();
  config.rounds = 0;
  CHECK_THROWS_AS(validate_config(config), ConfigError);
  config = small_tsp_experiment();
  config.runs = 0;
  CHECK_THROWS_AS(validate_config(config), ConfigError);
  config = small_tsp_experiment();
  config.budget_range = std::make_pair(7, 3);
  CHECK_THROWS_AS(validate_config(config), ConfigError);
}

TEST_CASE("aggregation averages the average-cost curves") {
  const std::vector<RunLog> logs{constant_cost_log(10, 2), constant_cost_log(10, 4)};
  const AggregateCurves curves = aggregate_runs(logs);
  REQUIRE(curves.t.size() == 10);
  for (double v : curves.mean_avg_cost_update) CHECK(v == doctest::Approx(3.0));
  for (double v : curves.mean_avg_cost_reported) CHECK(v == doctest::Approx(3.0));

  const AggregateCurves single = aggregate_runs({constant_cost_log(10, 2)});
  for (double v : single.mean_avg_cost_update) CHECK(v == doctest::Approx(2.0));

  const AggregateCurves zero = aggregate_runs({constant_cost_log(5, 0)});
  for (double v : zero.mean_avg_cost_update) CHECK(v == 0.0);

  CHECK_THROWS_AS(aggregate_runs({constant_cost_log(5, 1), constant_cost_log(6, 1)}),
                  ConfigError);
  CHECK_THROWS_AS(aggregate_runs({}), ConfigError);
}

TEST_CASE("csv output carries the exact schema") {
  const ExperimentConfig config = small_tsp_experiment();
  const RunLog log = run_experiment(config, 0);
  const auto report = applicable_bound_report(log, false);
  const auto path = temp_file("colearn_test_run.csv");
  write_run_csv(path.string(), log, report);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header ==
        "t,cost_reported,cost_update,cum_cost_update,avg_cost_update,avg_sq_cost_update,"
        "bound_value,bound_satisfied,weight_norm,violation_flag");
  int lines = 0;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) ++lines;
  CHECK(lines == config.rounds);
  std::filesystem::remove(path);
}

TEST_CASE("empty log writes a header-only csv") {
  RunLog empty;
  const auto path = temp_file("colearn_test_empty.csv");
  write_run_csv(path.string(), empty, std::nullopt);
  const std::string text = slurp(path.string());
  CHECK(text ==
        "t,cost_reported,cost_update,cum_cost_update,avg_cost_update,avg_sq_cost_update,"
        "bound_value,bound_satisfied,weight_norm,violation_flag\n");
  std::filesystem::remove(path);
}

TEST_CASE("identical configs emit byte-identical files") {
  const ExperimentConfig config = small_tsp_experiment();
  const auto path_a = temp_file("colearn_repro_a.csv");
  const auto path_b = temp_file("colearn_repro_b.csv");
  const RunLog log_a = run_experiment(config, 0);
  const RunLog log_b = run_experiment(config, 0);
  write_run_csv(path_a.string(), log_a, applicable_bound_report(log_a, false));
  write_run_csv(path_b.string(), log_b, applicable_bound_report(log_b, false));
  CHECK(slurp(path_a.string()) == slurp(path_b.string()));
  std::filesystem::remove(path_a);
  std::filesystem::remove(path_b);
}

TEST_CASE("results json round-trips structurally") {
  const ExperimentConfig config = small_tsp_experiment();
  const std::vector<RunLog> logs = run_all(config);
  std::vector<std::optional<BoundReport>> reports;
  for (const RunLog& log : logs) reports.push_back(applicable_bound_report(log, false));
  const auto path = temp_file("colearn_test_results.json");
  write_results_json(path.string(), config, logs, reports);
  const nlohmann::json parsed = nlohmann::json::parse(slurp(path.string()));
  CHECK(parsed == nlohmann::json::parse(parsed.dump()));
  CHECK(parsed.at("runs").size() == logs.size());
  CHECK(parsed.at("config").at("rounds") == config.rounds);
  const ExperimentConfig echoed = experiment_config_from_json(parsed.at("config"));
  CHECK(echoed.rounds == config.rounds);
  CHECK(echoed.master_seed == config.master_seed);
  CHECK(echoed.rule == config.rule);
  std::filesystem::remove(path);
}

TEST_CASE("plot data uses one (t, avg_cost) pair per round") {
  const AggregateCurves curves = aggregate_runs({constant_cost_log(4, 2)});
  const auto path = temp_file("colearn_test_plot.dat");
  write_plot_data(path.string(), curves);
  CHECK(slurp(path.string()) == "0 2\n1 2\n2 2\n3 2\n");
  std::filesystem::remove(path);
}

TEST_CASE("instance and trace json round-trips reproduce the object") {
  DomainConfig config;
  config.kind = DomainKind::MultiTsp;
  config.visible_dim = 4;
  config.hidden_dim = 1;
  config.num_points = 7;
  config.num_salespersons = 2;
  const auto domain = make_domain(config);
  Rng model_rng(51), rng(52);
  const TrueModel truth = draw_true_model(config, model_rng);
  const Instance inst = domain->generate_instance(truth, rng);
  CHECK(instance_from_json(instance_to_json(inst)) == inst);

  const Solution start = domain->solve(inst, WeightVec(config.visible_dim, 0.0));
  const ImprovementTrace trace =
      expert_improve(*domain, inst, start, truth.w_star_full, config.kappa);
  const ImprovementTrace back = trace_from_json(trace_to_json(trace));
  CHECK(back.steps == trace.steps);
  CHECK(back.true_utilities == trace.true_utilities);
  CHECK(back.reported_cost() == trace.reported_cost());
}

TEST_CASE("experiment config json round-trips including the budget") {
  ExperimentConfig config = small_tsp_experiment();
  config.budget_range = std::make_pair(5, 15);
  config.strict = true;
  const ExperimentConfig back = experiment_config_from_json(experiment_config_to_json(config));
  CHECK(back.budget_range == config.budget_range);
  CHECK(back.strict == config.strict);
  CHECK(back.domain.kind == config.domain.kind);
  CHECK(back.domain.kappa == config.domain.kappa);
}

TEST_CASE("multi-tsp runs satisfy the realizable bounds as well") {
  ExperimentConfig config;
  config.domain.kind = DomainKind::MultiTsp;
  config.domain.visible_dim = 8;
  config.domain.kappa = 0.1;
  config.domain.num_points = 12;
  config.domain.num_salespersons = 3;
  config.rounds = 60;
  config.runs = 3;
  config.master_seed = 23;
  for (UpdateRule rule : {UpdateRule::Per, UpdateRule::CsPer, UpdateRule::Pa, UpdateRule::CsPa}) {
    config.rule = rule;
    for (const RunLog& log : run_all(config)) {
      const BoundReport report = check_run(log, bound_inputs_for(log), false);
      CHECK(report.all_satisfied);
      for (const RunRow& row : log.rows) CHECK_FALSE(row.violation);
    }
  }
}

TEST_CASE("ranking runs complete and stay passive once the order is learned") {
  ExperimentConfig config;
  config.domain.kind = DomainKind::Ranking;
  config.domain.visible_dim = 8;
  config.domain.kappa = 0.1;
  config.domain.list_length = 12;
  config.rounds = 120;
  config.runs = 2;
  config.master_seed = 29;
  config.rule = UpdateRule::Per;
  for (const RunLog& log : run_all(config)) {
    long long late_cost = 0;
    for (int t = 100; t < 120; ++t) late_cost += log.rows[t].cost_update;
    long long early_cost = 0;
    for (int t = 0; t < 20; ++t) early_cost += log.rows[t].cost_update;
    // Noise-free synthetic labels are learnable; late rounds cost less.
    CHECK(late_cost <= early_cost);
  }
}
