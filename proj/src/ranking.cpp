#include <algorithm>
#include <cmath>
#include <numeric>

#include "colearn/error.hpp"
#include "domains_internal.hpp"

namespace colearn {

double RankingDomain::position_weight(int i) { return 1.0 / std::log2(static_cast<double>(i + 2)); }

RankingDomain::RankingDomain(DomainConfig config) : Domain(config) {
  if (config_.list_length < 1) throw ConfigError("RankingDomain: list_length must be positive");
}

Instance RankingDomain::generate_instance(const TrueModel& truth, Rng& rng) const {
  const int n = config_.list_length;
  const int full_dim = config_.visible_dim + config_.hidden_dim;
  if (static_cast<int>(truth.w_star_full.size()) != full_dim)
    throw DimensionError("RankingDomain: true model dimension mismatch");
  Instance inst;
  inst.kind = DomainKind::Ranking;
  inst.visible_dim = config_.visible_dim;
  inst.hidden_dim = config_.hidden_dim;
  inst.features.reserve(n);
  for (int d = 0; d < n; ++d) inst.features.push_back(draw_feature_row(full_dim, rng));

  // Relevance labels 0..4: quintile rank of the true utility within the list.
  std::vector<double> score(n);
  for (int d = 0; d < n; ++d) score[d] = dot(truth.w_star_full, inst.features[d]);
  std::vector<int> by_score(n);
  std::iota(by_score.begin(), by_score.end(), 0);
  std::stable_sort(by_score.begin(), by_score.end(),
                   [&score](int a, int b) { return score[a] < score[b]; });
  inst.relevance.assign(n, 0);
  for (int rank = 0; rank < n; ++rank)
    inst.relevance[by_score[rank]] = std::min(4, rank * 5 / n);
  return inst;
}

void RankingDomain::check_solution(const Instance& instance, const Solution& solution) const {
  const int n = static_cast<int>(instance.features.size());
  if (!solution.tours.empty() || static_cast<int>(solution.order.size()) != n)
    throw ConfigError("ranking solution: expected an ordering of all documents");
  std::vector<bool> seen(n, false);
  for (int d : solution.order) {
    if (d < 0 || d >= n || seen[d])
      throw ConfigError("ranking solution: each document exactly once");
    seen[d] = true;
  }
}

FeatureVec RankingDomain::feature_map(const Instance& instance, const Solution& solution,
                                      bool include_hidden) const {
  check_solution(instance, solution);
  FeatureVec sum(instance.visible_dim + instance.hidden_dim, 0.0);
  for (std::size_t i = 0; i < solution.order.size(); ++i) {
    const double gamma = position_weight(static_cast<int>(i));
    const FeatureVec& row = instance.features[solution.order[i]];
    for (std::size_t d = 0; d < sum.size(); ++d) sum[d] += gamma * row[d];
  }
  return finish_feature_sum(std::move(sum), instance.visible_dim, include_hidden);
}

double RankingDomain::feature_bound() const {
  double weight_sum = 0.0;
  for (int i = 0; i < config_.list_length; ++i) weight_sum += position_weight(i);
  return weight_sum * std::sqrt(static_cast<double>(config_.visible_dim));
}

std::vector<Solution> RankingDomain::neighborhood(const Instance& instance,
                                                  const Solution& solution) const {
  check_solution(instance, solution);
  std::vector<Solution> out;
  const int n = static_cast<int>(solution.order.size());
  out.reserve(n > 0 ? n - 1 : 0);
  for (int i = 0; i + 1 < n; ++i) {
    Solution next = solution;
    std::swap(next.order[i], next.order[i + 1]);
    out.push_back(std::move(next));
  }
  return out;
}

std::optional<Domain::ScoredMove> RankingDomain::first_gain_move(
    const Instance& instance, const Solution& solution, const std::vector<double>& scores,
    double min_gain, bool inclusive) const {
  (void)instance;
  const int n = static_cast<int>(solution.order.size());
  for (int i = 0; i + 1 < n; ++i) {
    const double gain = (position_weight(i) - position_weight(i + 1)) *
                        (scores[solution.order[i + 1]] - scores[solution.order[i]]);
    if (inclusive ? gain >= min_gain : gain > min_gain) {
      Solution next = solution;
      std::swap(next.order[i], next.order[i + 1]);
      return ScoredMove{std::move(next), gain};
    }
  }
  return std::nullopt;
}

Solution RankingDomain::solve(const Instance& instance, const WeightVec& w) const {
  const std::vector<double> scores = entity_scores(instance, w);
  Solution sol;
  sol.order.resize(instance.features.size());
  std::iota(sol.order.begin(), sol.order.end(), 0);
  std::stable_sort(sol.order.begin(), sol.order.end(),
                   [&scores](int a, int b) { return scores[a] > scores[b]; });
  return sol;
}

}  // namespace colearn
