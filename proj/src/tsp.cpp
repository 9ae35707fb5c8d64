#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "colearn/error.hpp"
#include "domains_internal.hpp"

namespace colearn {
namespace {

// Undirected edge row for i != j, lexicographic over pairs (min, max).
inline int pair_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

std::vector<FeatureVec> draw_edge_table(int n, int full_dim, Rng& rng) {
  std::vector<FeatureVec> rows;
  rows.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) rows.push_back(draw_feature_row(full_dim, rng));
  return rows;
}

}  // namespace

TspDomain::TspDomain(DomainConfig config) : Domain(config) {
  if (config_.num_points < 3) throw ConfigError("TspDomain: num_points must be at least 3");
}

Instance TspDomain::generate_instance(const TrueModel&, Rng& rng) const {
  Instance inst;
  inst.kind = DomainKind::Tsp;
  inst.visible_dim = config_.visible_dim;
  inst.hidden_dim = config_.hidden_dim;
  inst.num_points = config_.num_points;
  inst.features =
      draw_edge_table(config_.num_points, config_.visible_dim + config_.hidden_dim, rng);
  return inst;
}

void TspDomain::check_solution(const Instance& instance, const Solution& solution) const {
  const int n = instance.num_points;
  if (!solution.tours.empty() || static_cast<int>(solution.order.size()) != n)
    throw ConfigError("tsp solution: expected a tour over all points");
  std::vector<bool> seen(n, false);
  for (int p : solution.order) {
    if (p < 0 || p >= n || seen[p]) throw ConfigError("tsp solution: each point exactly once");
    seen[p] = true;
  }
}

FeatureVec TspDomain::feature_map(const Instance& instance, const Solution& solution,
                                  bool include_hidden) const {
  check_solution(instance, solution);
  const int n = instance.num_points;
  FeatureVec sum(instance.visible_dim + instance.hidden_dim, 0.0);
  for (int i = 0; i < n; ++i) {
    const FeatureVec& row =
        instance.features[pair_index(n, solution.order[i], solution.order[(i + 1) % n])];
    for (std::size_t d = 0; d < sum.size(); ++d) sum[d] += row[d];
  }
  return finish_feature_sum(std::move(sum), instance.visible_dim, include_hidden);
}

double TspDomain::feature_bound() const {
  return config_.num_points * std::sqrt(static_cast<double>(config_.visible_dim));
}

std::vector<Solution> TspDomain::neighborhood(const Instance& instance,
                                              const Solution& solution) const {
  check_solution(instance, solution);
  const int n = instance.num_points;
  std::vector<Solution> out;
  // Reversals of segments [i..j]; lengths n-1 and n reproduce the same
  // undirected tour and are skipped.
  for (int i = 0; i + 1 < n; ++i) {
    for (int j = i + 1; j < n && j - i <= n - 3; ++j) {
      Solution next = solution;
      std::reverse(next.order.begin() + i, next.order.begin() + j + 1);
      out.push_back(std::move(next));
    }
  }
  return out;
}

std::optional<Domain::ScoredMove> TspDomain::first_gain_move(const Instance& instance,
                                                             const Solution& solution,
                                                             const std::vector<double>& scores,
                                                             double min_gain,
                                                             bool inclusive) const {
  const int n = instance.num_points;
  const std::vector<int>& t = solution.order;
  for (int i = 0; i + 1 < n; ++i) {
    const int a = t[(i + n - 1) % n];
    const int b = t[i];
    for (int j = i + 1; j < n && j - i <= n - 3; ++j) {
      const int c = t[j];
      const int d = t[(j + 1) % n];
      const double gain = scores[pair_index(n, a, c)] + scores[pair_index(n, b, d)] -
                          scores[pair_index(n, a, b)] - scores[pair_index(n, c, d)];
      if (inclusive ? gain >= min_gain : gain > min_gain) {
        Solution next = solution;
        std::reverse(next.order.begin() + i, next.order.begin() + j + 1);
        return ScoredMove{std::move(next), gain};
      }
    }
  }
  return std::nullopt;
}

Solution TspDomain::solve(const Instance& instance, const WeightVec& w) const {
  const int n = instance.num_points;
  const std::vector<double> scores = entity_scores(instance, w);

  // Cheapest insertion, seeded with point 0: repeatedly place the
  // (point, position) pair with the best utility change.
  Solution sol;
  sol.order.push_back(0);
  std::vector<int> unvisited(n - 1);
  std::iota(unvisited.begin(), unvisited.end(), 1);
  while (!unvisited.empty()) {
    int best_point = -1, best_pos = -1;
    double best_gain = -std::numeric_limits<double>::infinity();
    const int m = static_cast<int>(sol.order.size());
    for (int p : unvisited) {
      if (m == 1) {
        const double gain = 2.0 * scores[pair_index(n, sol.order[0], p)];
        if (gain > best_gain) {
          best_gain = gain;
          best_point = p;
          best_pos = 1;
        }
        continue;
      }
      for (int q = 0; q < m; ++q) {
        const int u = sol.order[q];
        const int v = sol.order[(q + 1) % m];
        const double gain =
            scores[pair_index(n, u, p)] + scores[pair_index(n, p, v)] - scores[pair_index(n, u, v)];
        if (gain > best_gain) {
          best_gain = gain;
          best_point = p;
          best_pos = q + 1;
        }
      }
    }
    sol.order.insert(sol.order.begin() + best_pos, best_point);
    unvisited.erase(std::find(unvisited.begin(), unvisited.end(), best_point));
  }

  // 2-opt to a local optimum under the same scores.
  for (;;) {
    auto move = first_gain_move(instance, sol, scores, 0.0, /*inclusive=*/false);
    if (!move) break;
    sol = std::move(move->next);
  }
  return sol;
}

}  // namespace colearn
