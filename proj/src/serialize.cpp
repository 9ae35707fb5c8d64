#include "colearn/serialize.hpp"

#include <fstream>

#include "colearn/error.hpp"
#include "colearn/harness.hpp"

namespace colearn {

using nlohmann::json;

json domain_config_to_json(const DomainConfig& config) {
  return json{{"kind", to_string(config.kind)},
              {"visible_dim", config.visible_dim},
              {"hidden_dim", config.hidden_dim},
              {"kappa", config.kappa},
              {"cube_dim", config.cube_dim},
              {"num_points", config.num_points},
              {"num_salespersons", config.num_salespersons},
              {"list_length", config.list_length},
              {"rng_seed", config.rng_seed}};
}

DomainConfig domain_config_from_json(const json& j) {
  DomainConfig config;
  const auto kind = parse_domain_kind(j.at("kind").get<std::string>());
  if (!kind) throw ConfigError("domain config: unknown kind '" + j.at("kind").get<std::string>() + "'");
  config.kind = *kind;
  config.visible_dim = j.value("visible_dim", config.visible_dim);
  config.hidden_dim = j.value("hidden_dim", config.hidden_dim);
  config.kappa = j.value("kappa", config.kappa);
  config.cube_dim = j.value("cube_dim", config.cube_dim);
  config.num_points = j.value("num_points", config.num_points);
  config.num_salespersons = j.value("num_salespersons", config.num_salespersons);
  config.list_length = j.value("list_length", config.list_length);
  config.rng_seed = j.value("rng_seed", config.rng_seed);
  return config;
}

json instance_to_json(const Instance& instance) {
  return json{{"kind", to_string(instance.kind)},
              {"visible_dim", instance.visible_dim},
              {"hidden_dim", instance.hidden_dim},
              {"features", instance.features},
              {"cube_dim", instance.cube_dim},
              {"num_points", instance.num_points},
              {"salesperson_start", instance.salesperson_start},
              {"salesperson_end", instance.salesperson_end},
              {"relevance", instance.relevance}};
}

Instance instance_from_json(const json& j) {
  Instance instance;
  const auto kind = parse_domain_kind(j.at("kind").get<std::string>());
  if (!kind) throw ConfigError("instance: unknown kind");
  instance.kind = *kind;
  instance.visible_dim = j.at("visible_dim").get<int>();
  instance.hidden_dim = j.at("hidden_dim").get<int>();
  instance.features = j.at("features").get<std::vector<FeatureVec>>();
  instance.cube_dim = j.value("cube_dim", 0);
  instance.num_points = j.value("num_points", 0);
  instance.salesperson_start = j.value("salesperson_start", std::vector<int>{});
  instance.salesperson_end = j.value("salesperson_end", std::vector<int>{});
  instance.relevance = j.value("relevance", std::vector<int>{});
  return instance;
}

json solution_to_json(const Solution& solution) {
  return json{{"order", solution.order}, {"tours", solution.tours}};
}

Solution solution_from_json(const json& j) {
  Solution solution;
  solution.order = j.value("order", std::vector<int>{});
  solution.tours = j.value("tours", std::vector<std::vector<int>>{});
  return solution;
}

json trace_to_json(const ImprovementTrace& trace) {
  json steps = json::array();
  for (const Solution& step : trace.steps) steps.push_back(solution_to_json(step));
  return json{{"steps", steps},
              {"true_utilities", trace.true_utilities},
              {"reported_cost", trace.reported_cost()}};
}

ImprovementTrace trace_from_json(const json& j) {
  ImprovementTrace trace;
  for (const json& step : j.at("steps")) trace.steps.push_back(solution_from_json(step));
  trace.true_utilities = j.at("true_utilities").get<std::vector<double>>();
  if (trace.true_utilities.size() != trace.steps.size())
    throw ConfigError("trace: steps and utilities must have equal length");
  return trace;
}

json experiment_config_to_json(const ExperimentConfig& config) {
  json j{{"domain", domain_config_to_json(config.domain)},
         {"rule", to_string(config.rule)},
         {"margin", config.margin},
         {"rounds", config.rounds},
         {"runs", config.runs},
         {"enforce_local_optimality", config.enforce_local_optimality},
         {"expert_baseline", config.expert_baseline},
         {"master_seed", config.master_seed},
         {"strict", config.strict}};
  if (config.budget_range)
    j["budget_range"] = json::array({config.budget_range->first, config.budget_range->second});
  return j;
}

ExperimentConfig experiment_config_from_json(const json& j) {
  ExperimentConfig config;
  config.domain = domain_config_from_json(j.at("domain"));
  if (j.contains("rule")) {
    const auto rule = parse_rule(j.at("rule").get<std::string>());
    if (!rule) throw ConfigError("experiment config: unknown rule '" +
                                 j.at("rule").get<std::string>() + "'");
    config.rule = *rule;
  }
  config.margin = j.value("margin", config.margin);
  config.rounds = j.value("rounds", config.rounds);
  config.runs = j.value("runs", config.runs);
  config.enforce_local_optimality =
      j.value("enforce_local_optimality", config.enforce_local_optimality);
  config.expert_baseline = j.value("expert_baseline", config.expert_baseline);
  config.master_seed = j.value("master_seed", config.master_seed);
  config.strict = j.value("strict", config.strict);
  if (j.contains("budget_range") && !j.at("budget_range").is_null()) {
    const auto range = j.at("budget_range").get<std::vector<int>>();
    if (range.size() != 2) throw ConfigError("experiment config: budget_range must be [lo, hi]");
    config.budget_range = std::make_pair(range[0], range[1]);
  }
  return config;
}

json run_log_to_json(const RunLog& log, const std::optional<BoundReport>& report) {
  json rows = json::array();
  for (std::size_t i = 0; i < log.rows.size(); ++i) {
    const RunRow& row = log.rows[i];
    const int t_count = row.t + 1;
    json r{{"t", row.t},
           {"cost_reported", row.cost_reported},
           {"cost_update", row.cost_update},
           {"cum_cost_update", row.cum_cost_update},
           {"avg_cost_update", static_cast<double>(row.cum_cost_update) / t_count},
           {"avg_sq_cost_update", static_cast<double>(row.cum_sq_cost_update) / t_count},
           {"weight_norm", row.weight_norm},
           {"violation_flag", row.violation}};
    if (report) {
      r["bound_value"] = report->rows[i].bound_value;
      r["bound_satisfied"] = report->rows[i].satisfied;
    } else {
      r["bound_value"] = nullptr;
      r["bound_satisfied"] = false;
    }
    rows.push_back(std::move(r));
  }
  json diagnostics;
  {
    std::vector<double> lambdas, xis;
    lambdas.reserve(log.rows.size());
    xis.reserve(log.rows.size());
    for (const RunRow& row : log.rows) {
      lambdas.push_back(row.lambda);
      xis.push_back(row.xi);
    }
    diagnostics = json{{"lambda", lambdas}, {"xi", xis}};
  }
  return json{{"run_index", log.run_index},
              {"run_seed", log.run_seed},
              {"domain", to_string(log.domain)},
              {"rule", to_string(log.rule)},
              {"expert_baseline", log.expert_baseline},
              {"feature_bound", log.feature_bound},
              {"w_star_visible_norm", log.w_star_visible_norm},
              {"kappa", log.kappa},
              {"rows", rows},
              {"final_weights", log.final_weights},
              {"diagnostics", diagnostics}};
}

ExperimentConfig load_experiment_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("load_experiment_config: cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError("load_experiment_config: " + path + ": " + e.what());
  }
  return experiment_config_from_json(j);
}

}  // namespace colearn
