#pragma once

#include <optional>
#include <vector>

#include "colearn/core.hpp"
#include "colearn/domain.hpp"

namespace colearn {

// The expert's improvement sequence z^(0)..z^(l) together with the true
// utility of every step. reported_cost() is the number of operator
// applications l.
struct ImprovementTrace {
  std::vector<Solution> steps;
  std::vector<double> true_utilities;

  int reported_cost() const { return static_cast<int>(steps.size()) - 1; }
};

struct Feedback {
  Solution improved;
  int update_cost = 0;
  int reported_cost = 0;
  bool assumption_violated = false;  // no disagreeing candidate existed; fell back to z^(l)
  FeatureVec phi_improved_visible;
  FeatureVec phi_candidate_visible;
};

/// Simulated expert: repeatedly applies the first neighbor in canonical order
/// whose true full-feature utility gain is at least kappa, until none exists
/// or the budget is spent. The ranking domain instead runs left-to-right
/// passes swapping adjacent documents whose relevance labels differ by 2 or
/// more in the wrong order.
ImprovementTrace expert_improve(const Domain& domain, const Instance& instance,
                                const Solution& start, const WeightVec& w_star_full, double kappa,
                                std::optional<int> budget = std::nullopt);

/// Feedback selection: the last candidate in the trace that the learner does
/// not consider an improvement over z^(0) (ties count as disagreement). Falls
/// back to z^(l) with the violation flag set when every candidate looks like
/// an improvement, which cannot happen when the presented solution was
/// locally optimal under the learner's utility.
Feedback select_feedback(const Domain& domain, const Instance& instance,
                         const ImprovementTrace& trace, const WeightVec& w_learner);

/// Index selection behind select_feedback: largest i >= 1 with
/// u_hat[i] <= u_hat[0], or -1 when none exists.
int select_disagreement_index(const std::vector<double>& u_hat);

/// First visible_dim coordinates of a full feature vector.
FeatureVec visible_projection(const FeatureVec& phi_full, int visible_dim);

}  // namespace colearn
