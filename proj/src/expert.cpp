#include "colearn/expert.hpp"

#include <utility>

#include "colearn/error.hpp"

namespace colearn {
namespace {

double true_utility(const Domain& domain, const Instance& instance, const Solution& solution,
                    const WeightVec& w_star_full) {
  return dot(w_star_full, domain.feature_map(instance, solution, /*include_hidden=*/true));
}

ImprovementTrace improve_by_operator_scan(const Domain& domain, const Instance& instance,
                                          const Solution& start, const WeightVec& w_star_full,
                                          double kappa, std::optional<int> budget) {
  const std::vector<double> scores = domain.entity_scores(instance, w_star_full);
  ImprovementTrace trace;
  trace.steps.push_back(start);
  trace.true_utilities.push_back(true_utility(domain, instance, start, w_star_full));
  while (!budget || trace.reported_cost() < *budget) {
    auto move =
        domain.first_gain_move(instance, trace.steps.back(), scores, kappa, /*inclusive=*/true);
    if (!move) break;
    trace.steps.push_back(std::move(move->next));
    trace.true_utilities.push_back(
        true_utility(domain, instance, trace.steps.back(), w_star_full));
  }
  return trace;
}

// Ranking protocol: bubble passes over the list, swapping adjacent documents
// whenever the later one is better by 2 or more relevance points, until a
// clean pass or the budget runs out.
ImprovementTrace improve_by_label_passes(const Domain& domain, const Instance& instance,
                                         const Solution& start, const WeightVec& w_star_full,
                                         std::optional<int> budget) {
  ImprovementTrace trace;
  trace.steps.push_back(start);
  trace.true_utilities.push_back(true_utility(domain, instance, start, w_star_full));
  Solution current = start;
  const int n = static_cast<int>(current.order.size());
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (budget && trace.reported_cost() >= *budget) return trace;
      const int front = instance.relevance[current.order[i]];
      const int back = instance.relevance[current.order[i + 1]];
      if (back >= front + 2) {
        std::swap(current.order[i], current.order[i + 1]);
        swapped = true;
        trace.steps.push_back(current);
        trace.true_utilities.push_back(true_utility(domain, instance, current, w_star_full));
      }
    }
  }
  return trace;
}

}  // namespace

ImprovementTrace expert_improve(const Domain& domain, const Instance& instance,
                                const Solution& start, const WeightVec& w_star_full, double kappa,
                                std::optional<int> budget) {
  if (!(kappa > 0.0)) throw ConfigError("expert_improve: kappa must be positive");
  if (budget && *budget < 0) throw ConfigError("expert_improve: budget must be nonnegative");
  domain.check_solution(instance, start);
  if (instance.kind == DomainKind::Ranking)
    return improve_by_label_passes(domain, instance, start, w_star_full, budget);
  return improve_by_operator_scan(domain, instance, start, w_star_full, kappa, budget);
}

int select_disagreement_index(const std::vector<double>& u_hat) {
  for (int i = static_cast<int>(u_hat.size()) - 1; i >= 1; --i)
    if (u_hat[i] <= u_hat[0]) return i;
  return -1;
}

Feedback select_feedback(const Domain& domain, const Instance& instance,
                         const ImprovementTrace& trace, const WeightVec& w_learner) {
  if (trace.steps.empty()) throw ConfigError("select_feedback: empty trace");
  Feedback fb;
  fb.reported_cost = trace.reported_cost();
  fb.phi_candidate_visible =
      domain.feature_map(instance, trace.steps.front(), /*include_hidden=*/false);
  if (fb.reported_cost == 0) {
    fb.improved = trace.steps.front();
    fb.phi_improved_visible = fb.phi_candidate_visible;
    return fb;
  }
  std::vector<double> u_hat(trace.steps.size());
  std::vector<FeatureVec> phis(trace.steps.size());
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    phis[i] = domain.feature_map(instance, trace.steps[i], /*include_hidden=*/false);
    u_hat[i] = dot(w_learner, phis[i]);
  }
  int pick = select_disagreement_index(u_hat);
  if (pick < 0) {
    pick = fb.reported_cost;
    fb.assumption_violated = true;
  }
  fb.improved = trace.steps[pick];
  fb.update_cost = pick;
  fb.phi_improved_visible = std::move(phis[pick]);
  return fb;
}

FeatureVec visible_projection(const FeatureVec& phi_full, int visible_dim) {
  if (visible_dim < 0 || visible_dim > static_cast<int>(phi_full.size()))
    throw DimensionError("visible_projection: visible_dim exceeds vector dimension");
  return FeatureVec(phi_full.begin(), phi_full.begin() + visible_dim);
}

}  // namespace colearn
