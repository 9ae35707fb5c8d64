#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "colearn/bounds.hpp"
#include "colearn/core.hpp"
#include "colearn/domain.hpp"
#include "colearn/run_log.hpp"

namespace colearn {

struct ExperimentConfig {
  DomainConfig domain;
  UpdateRule rule = UpdateRule::CsPer;
  double margin = 1.0;
  int rounds = 500;
  int runs = 10;
  bool enforce_local_optimality = true;
  bool expert_baseline = false;  // run with w fixed to the visible w*, no updates
  std::optional<std::pair<int, int>> budget_range;
  std::uint64_t master_seed = 0;
  bool strict = false;  // nonzero exit on a bound violation (CLI `run`)
};

void validate_config(const ExperimentConfig& config);

/// One seeded pass of the coactive protocol: per round, generate an instance,
/// solve under the current weights (plus local-search enforcement when
/// configured), let the expert improve, select feedback, update. The run seed
/// is derived from (master_seed, run_index) by a fixed splitting rule.
RunLog run_experiment(const ExperimentConfig& config, int run_index);

/// All config.runs runs of the experiment.
std::vector<RunLog> run_all(const ExperimentConfig& config);

// Per-round means across runs of the average-cost-so-far curves.
struct AggregateCurves {
  std::vector<int> t;
  std::vector<double> mean_avg_cost_reported;
  std::vector<double> mean_avg_cost_update;
};

AggregateCurves aggregate_runs(const std::vector<RunLog>& logs);

/// BoundInputs of a finished run (R, visible |w*|, kappa, horizon).
BoundInputs bound_inputs_for(const RunLog& log);

/// Applicable bound report for a run: realizable formulas when noise-free,
/// slack-aware ones for PER/CSPER when noisy; nullopt for the PA family under noise.
std::optional<BoundReport> applicable_bound_report(const RunLog& log, bool noisy);

/// Per-round CSV with the exact column set
/// t,cost_reported,cost_update,cum_cost_update,avg_cost_update,
/// avg_sq_cost_update,bound_value,bound_satisfied,weight_norm,violation_flag.
/// A missing report writes nan/0 bound columns.
void write_run_csv(const std::string& path, const RunLog& log,
                   const std::optional<BoundReport>& report);

/// JSON mirror of the CSV rows for all runs, plus config echo, per-run seeds,
/// final weights and lambda/xi diagnostics.
void write_results_json(const std::string& path, const ExperimentConfig& config,
                        const std::vector<RunLog>& logs,
                        const std::vector<std::optional<BoundReport>>& reports);

/// Two-column whitespace-separated (t, mean average reported cost) pairs,
/// one row per round.
void write_plot_data(const std::string& path, const AggregateCurves& curves);

}  // namespace colearn
