#pragma once

#include <optional>

#include "json.hpp"

#include "colearn/bounds.hpp"
#include "colearn/domain.hpp"
#include "colearn/expert.hpp"
#include "colearn/run_log.hpp"

namespace colearn {

struct ExperimentConfig;

// JSON forms for replayable artifacts. Doubles survive round trips
// bit-exactly (shortest-roundtrip formatting).

nlohmann::json domain_config_to_json(const DomainConfig& config);
DomainConfig domain_config_from_json(const nlohmann::json& j);

nlohmann::json instance_to_json(const Instance& instance);
Instance instance_from_json(const nlohmann::json& j);

nlohmann::json solution_to_json(const Solution& solution);
Solution solution_from_json(const nlohmann::json& j);

nlohmann::json trace_to_json(const ImprovementTrace& trace);
ImprovementTrace trace_from_json(const nlohmann::json& j);

nlohmann::json experiment_config_to_json(const ExperimentConfig& config);
ExperimentConfig experiment_config_from_json(const nlohmann::json& j);

nlohmann::json run_log_to_json(const RunLog& log, const std::optional<BoundReport>& report);

ExperimentConfig load_experiment_config(const std::string& path);

}  // namespace colearn
