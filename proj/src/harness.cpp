#include "colearn/harness.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>

#include "colearn/error.hpp"
#include "colearn/expert.hpp"
#include "colearn/rng.hpp"
#include "colearn/serialize.hpp"

namespace colearn {
namespace {

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

}  // namespace

void validate_config(const ExperimentConfig& config) {
  if (config.rounds < 1) throw ConfigError("ExperimentConfig: rounds must be at least 1");
  if (config.runs < 1) throw ConfigError("ExperimentConfig: runs must be at least 1");
  if (config.budget_range) {
    if (config.budget_range->first < 0 || config.budget_range->first > config.budget_range->second)
      throw ConfigError("ExperimentConfig: budget range must satisfy 0 <= lo <= hi");
  }
  if (config.rule == UpdateRule::Pa && !(config.margin > 0.0))
    throw ConfigError("ExperimentConfig: PA margin must be positive");
}

RunLog run_experiment(const ExperimentConfig& config, int run_index) {
  validate_config(config);
  const auto domain = make_domain(config.domain);
  const std::uint64_t seed = derive_run_seed(config.master_seed, run_index);
  Rng rng(seed);
  const TrueModel truth = draw_true_model(config.domain, rng);
  const WeightVec w_star_visible = truth.visible(config.domain.visible_dim);
  const UpdateParams params{config.rule, config.margin};

  RunLog log;
  log.domain = config.domain.kind;
  log.rule = config.rule;
  log.expert_baseline = config.expert_baseline;
  log.run_index = run_index;
  log.run_seed = seed;
  log.feature_bound = domain->feature_bound();
  log.w_star_visible_norm = norm(w_star_visible);
  log.kappa = config.domain.kappa;
  log.rows.reserve(config.rounds);

  WeightVec w = config.expert_baseline ? w_star_visible
                                       : WeightVec(config.domain.visible_dim, 0.0);
  long long cum_reported = 0, cum_update = 0, cum_sq_update = 0;
  for (int t = 0; t < config.rounds; ++t) {
    const Instance instance = domain->generate_instance(truth, rng);
    Solution presented = domain->solve(instance, w);
    if (config.enforce_local_optimality)
      presented = local_search(*domain, instance, std::move(presented), w, 0.0);
    std::optional<int> budget;
    if (config.budget_range)
      budget = uniform_int(rng, config.budget_range->first, config.budget_range->second);
    const ImprovementTrace trace = expert_improve(*domain, instance, presented, truth.w_star_full,
                                                  config.domain.kappa, budget);
    const Feedback feedback = select_feedback(*domain, instance, trace, w);

    RunRow row;
    row.t = t;
    row.cost_reported = feedback.reported_cost;
    row.cost_update = feedback.update_cost;
    row.violation = feedback.assumption_violated;
    if (feedback.update_cost > 0) {
      DeltaRecord record;
      record.delta = compute_delta(feedback.phi_improved_visible, feedback.phi_candidate_visible);
      record.update_cost = feedback.update_cost;
      if (config.domain.hidden_dim > 0)
        row.xi = compute_xi(record.update_cost, dot(w_star_visible, record.delta),
                            config.domain.kappa);
      if (!config.expert_baseline) {
        if (norm(record.delta) == 0.0) {
          // Two distinct solutions with an identical feature vector; the
          // PA rates are undefined here, so the round is skipped.
          std::cerr << "warning: degenerate zero delta at round " << t << ", update skipped\n";
          row.violation = true;
        } else {
          record.lambda = learning_rate(params, w, record.delta, record.update_cost);
          w = coactive_update(w, record.delta, record.update_cost, params);
          row.lambda = record.lambda;
        }
      }
    }
    cum_reported += row.cost_reported;
    cum_update += row.cost_update;
    cum_sq_update += static_cast<long long>(row.cost_update) * row.cost_update;
    row.cum_cost_reported = cum_reported;
    row.cum_cost_update = cum_update;
    row.cum_sq_cost_update = cum_sq_update;
    row.weight_norm = norm(w);
    log.rows.push_back(std::move(row));
  }
  log.final_weights = std::move(w);
  return log;
}

std::vector<RunLog> run_all(const ExperimentConfig& config) {
  validate_config(config);
  std::vector<RunLog> logs;
  logs.reserve(config.runs);
  for (int r = 0; r < config.runs; ++r) logs.push_back(run_experiment(config, r));
  return logs;
}

AggregateCurves aggregate_runs(const std::vector<RunLog>& logs) {
  if (logs.empty()) throw ConfigError("aggregate_runs: no logs");
  const std::size_t rounds = logs.front().rows.size();
  for (const RunLog& log : logs)
    if (log.rows.size() != rounds)
      throw ConfigError("aggregate_runs: logs have mismatched lengths");
  AggregateCurves curves;
  curves.t.resize(rounds);
  curves.mean_avg_cost_reported.assign(rounds, 0.0);
  curves.mean_avg_cost_update.assign(rounds, 0.0);
  for (std::size_t i = 0; i < rounds; ++i) {
    curves.t[i] = static_cast<int>(i);
    for (const RunLog& log : logs) {
      const RunRow& row = log.rows[i];
      curves.mean_avg_cost_reported[i] +=
          static_cast<double>(row.cum_cost_reported) / (row.t + 1);
      curves.mean_avg_cost_update[i] += static_cast<double>(row.cum_cost_update) / (row.t + 1);
    }
    curves.mean_avg_cost_reported[i] /= static_cast<double>(logs.size());
    curves.mean_avg_cost_update[i] /= static_cast<double>(logs.size());
  }
  return curves;
}

BoundInputs bound_inputs_for(const RunLog& log) {
  BoundInputs inputs;
  inputs.feature_bound = log.feature_bound;
  inputs.w_star_norm = log.w_star_visible_norm;
  inputs.kappa = log.kappa;
  inputs.rounds = static_cast<int>(log.rows.size());
  return inputs;
}

std::optional<BoundReport> applicable_bound_report(const RunLog& log, bool noisy) {
  if (noisy && (log.rule == UpdateRule::Pa || log.rule == UpdateRule::CsPa)) return std::nullopt;
  return check_run(log, bound_inputs_for(log), noisy);
}

void write_run_csv(const std::string& path, const RunLog& log,
                   const std::optional<BoundReport>& report) {
  std::ofstream out(path);
  if (!out) throw IoError("write_run_csv: cannot open " + path);
  out << "t,cost_reported,cost_update,cum_cost_update,avg_cost_update,avg_sq_cost_update,"
         "bound_value,bound_satisfied,weight_norm,violation_flag\n";
  for (std::size_t i = 0; i < log.rows.size(); ++i) {
    const RunRow& row = log.rows[i];
    const int t_count = row.t + 1;
    const double avg = static_cast<double>(row.cum_cost_update) / t_count;
    const double avg_sq = static_cast<double>(row.cum_sq_cost_update) / t_count;
    const double bound_value =
        report ? report->rows[i].bound_value : std::numeric_limits<double>::quiet_NaN();
    const bool satisfied = report ? report->rows[i].satisfied : false;
    out << row.t << ',' << row.cost_reported << ',' << row.cost_update << ','
        << row.cum_cost_update << ',' << format_double(avg) << ',' << format_double(avg_sq) << ','
        << format_double(bound_value) << ',' << (satisfied ? 1 : 0) << ','
        << format_double(row.weight_norm) << ',' << (row.violation ? 1 : 0) << '\n';
  }
  if (!out) throw IoError("write_run_csv: write failed for " + path);
}

void write_results_json(const std::string& path, const ExperimentConfig& config,
                        const std::vector<RunLog>& logs,
                        const std::vector<std::optional<BoundReport>>& reports) {
  if (reports.size() != logs.size())
    throw ConfigError("write_results_json: one report slot per log required");
  nlohmann::json doc;
  doc["config"] = experiment_config_to_json(config);
  doc["runs"] = nlohmann::json::array();
  for (std::size_t r = 0; r < logs.size(); ++r) {
    doc["runs"].push_back(run_log_to_json(logs[r], reports[r]));
  }
  std::ofstream out(path);
  if (!out) throw IoError("write_results_json: cannot open " + path);
  out << doc.dump(2) << '\n';
  if (!out) throw IoError("write_results_json: write failed for " + path);
}

void write_plot_data(const std::string& path, const AggregateCurves& curves) {
  std::ofstream out(path);
  if (!out) throw IoError("write_plot_data: cannot open " + path);
  for (std::size_t i = 0; i < curves.t.size(); ++i)
    out << curves.t[i] << ' ' << format_double(curves.mean_avg_cost_reported[i]) << '\n';
  if (!out) throw IoError("write_plot_data: write failed for " + path);
}

}  // namespace colearn
