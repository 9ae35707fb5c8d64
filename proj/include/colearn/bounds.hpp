#pragma once

#include <vector>

#include "colearn/core.hpp"
#include "colearn/run_log.hpp"

namespace colearn {

// Quantities entering the average-cost bound formulas.
struct BoundInputs {
  double feature_bound = 0.0;  // R
  double w_star_norm = 0.0;    // |w*|, visible projection
  double kappa = 0.0;
  int rounds = 1;              // T
  double xi_sum = 0.0;         // sum of xi_t (noisy setting)
  double xi_cost_sum = 0.0;    // sum of xi_t * C_t (noisy setting)
};

/// Realizable-setting average cost bound after `rounds` rounds:
///   PER   -> 2 R |w*| / (kappa sqrt(T))        on the average cost
///   CSPER -> 4 R^2 |w*|^2 / (kappa^2 T)        on the average squared cost
///   PA    -> 4 R^2 |w*|^2 / (kappa^2 sqrt(T))  on the average cost
///   CSPA  -> 4 R^2 |w*|^2 / (kappa^2 sqrt(T))  on the average squared cost
/// For integer costs the squared-cost averages dominate the plain averages,
/// so the CSPER/CSPA values bound both.
double realizable_bound(UpdateRule rule, const BoundInputs& inputs);

/// Noisy-setting bounds; defined for PER and CSPER only
/// (UnsupportedRuleError otherwise). With all xi = 0 these reduce exactly to
/// realizable_bound.
double noisy_bound(UpdateRule rule, const BoundInputs& inputs);

/// Smallest slack making the relaxed improvement assumption hold for one
/// round: max(0, kappa * update_cost - true_visible_gain), where
/// true_visible_gain is the utility gain of the selected feedback under the
/// visible projection of w*.
double compute_xi(int update_cost, double true_visible_gain, double kappa);

struct BoundRow {
  double empirical = 0.0;     // avg update cost (PER/PA) or avg squared update cost (CSPER/CSPA)
  double bound_value = 0.0;
  bool satisfied = false;
  double empirical_reported = 0.0;  // informational: avg reported cost
  bool satisfied_reported = false;  // informational: reported average vs the same bound
};

struct BoundReport {
  UpdateRule rule = UpdateRule::Per;
  bool noisy = false;
  std::vector<BoundRow> rows;
  bool all_satisfied = true;
  // CSPER only: running sum of squared update costs stayed below the
  // constant 4 R^2 |w*|^2 / kappa^2 at every round.
  bool csper_constant_ok = true;
};

/// Evaluates the applicable bound at every round of a run log against the
/// cumulative update costs. noisy selects the slack-aware formulas with prefix
/// xi sums taken from the log. Comparison tolerance is 1e-9 absolute.
BoundReport check_run(const RunLog& log, const BoundInputs& base, bool noisy);

}  // namespace colearn
