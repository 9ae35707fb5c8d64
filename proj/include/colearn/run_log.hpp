#pragma once

#include <cstdint>
#include <vector>

#include "colearn/core.hpp"
#include "colearn/domain.hpp"

namespace colearn {

// One round of one seeded experiment. Cumulative columns are prefix sums of
// the per-round columns; weight_norm is |w| after the round's update.
struct RunRow {
  int t = 0;
  int cost_reported = 0;
  int cost_update = 0;
  double lambda = 0.0;
  long long cum_cost_reported = 0;
  long long cum_cost_update = 0;
  long long cum_sq_cost_update = 0;
  double weight_norm = 0.0;
  bool violation = false;  // assumption fallback or degenerate-delta skip
  double xi = 0.0;         // noisy-setting slack; 0 in noise-free runs

  bool operator==(const RunRow&) const = default;
};

struct RunLog {
  DomainKind domain = DomainKind::Tsp;
  UpdateRule rule = UpdateRule::Per;
  bool expert_baseline = false;
  int run_index = 0;
  std::uint64_t run_seed = 0;
  double feature_bound = 0.0;        // R of the domain
  double w_star_visible_norm = 0.0;  // |w*| over the visible dimensions
  double kappa = 0.0;
  std::vector<RunRow> rows;
  WeightVec final_weights;

  bool operator==(const RunLog&) const = default;
};

}  // namespace colearn
