#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "colearn/error.hpp"
#include "domains_internal.hpp"

namespace colearn {
namespace {

inline int pair_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

}  // namespace

MultiTspDomain::MultiTspDomain(DomainConfig config) : Domain(config) {
  if (config_.num_salespersons < 1)
    throw ConfigError("MultiTspDomain: need at least one salesperson");
  if (config_.num_points < 2 * config_.num_salespersons)
    throw ConfigError("MultiTspDomain: too few points for distinct start/end locations");
}

Instance MultiTspDomain::generate_instance(const TrueModel&, Rng& rng) const {
  const int n = config_.num_points;
  const int a_count = config_.num_salespersons;
  Instance inst;
  inst.kind = DomainKind::MultiTsp;
  inst.visible_dim = config_.visible_dim;
  inst.hidden_dim = config_.hidden_dim;
  inst.num_points = n;
  const int full_dim = config_.visible_dim + config_.hidden_dim;
  inst.features.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) inst.features.push_back(draw_feature_row(full_dim, rng));

  // Start/end locations are distinct points, drawn without replacement.
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  auto take = [&pool, &rng]() {
    const int at = uniform_int(rng, 0, static_cast<int>(pool.size()) - 1);
    const int point = pool[at];
    pool.erase(pool.begin() + at);
    return point;
  };
  for (int a = 0; a < a_count; ++a) {
    inst.salesperson_start.push_back(take());
    inst.salesperson_end.push_back(take());
  }
  return inst;
}

void MultiTspDomain::check_solution(const Instance& instance, const Solution& solution) const {
  const int n = instance.num_points;
  const int a_count = static_cast<int>(instance.salesperson_start.size());
  if (!solution.order.empty() || static_cast<int>(solution.tours.size()) != a_count)
    throw ConfigError("multi-tsp solution: expected one tour per salesperson");
  std::vector<bool> seen(n, false);
  for (int a = 0; a < a_count; ++a) {
    const auto& tour = solution.tours[a];
    if (tour.size() < 2 || tour.front() != instance.salesperson_start[a] ||
        tour.back() != instance.salesperson_end[a])
      throw ConfigError("multi-tsp solution: tour must run from its start to its end point");
    for (int p : tour) {
      if (p < 0 || p >= n || seen[p])
        throw ConfigError("multi-tsp solution: each point exactly once");
      seen[p] = true;
    }
  }
  for (int p = 0; p < n; ++p)
    if (!seen[p]) throw ConfigError("multi-tsp solution: every point must be visited");
}

FeatureVec MultiTspDomain::feature_map(const Instance& instance, const Solution& solution,
                                       bool include_hidden) const {
  check_solution(instance, solution);
  const int n = instance.num_points;
  FeatureVec sum(instance.visible_dim + instance.hidden_dim, 0.0);
  for (const auto& tour : solution.tours) {
    for (std::size_t i = 0; i + 1 < tour.size(); ++i) {
      const FeatureVec& row = instance.features[pair_index(n, tour[i], tour[i + 1])];
      for (std::size_t d = 0; d < sum.size(); ++d) sum[d] += row[d];
    }
  }
  return finish_feature_sum(std::move(sum), instance.visible_dim, include_hidden);
}

double MultiTspDomain::feature_bound() const {
  return (config_.num_points + config_.num_salespersons) *
         std::sqrt(static_cast<double>(config_.visible_dim));
}

std::vector<Solution> MultiTspDomain::neighborhood(const Instance& instance,
                                                   const Solution& solution) const {
  check_solution(instance, solution);
  std::vector<Solution> out;
  for (std::size_t a = 0; a < solution.tours.size(); ++a) {
    const int len = static_cast<int>(solution.tours[a].size());
    for (int i = 1; i + 1 < len; ++i) {
      for (int j = i + 1; j + 1 < len; ++j) {
        Solution next = solution;
        std::reverse(next.tours[a].begin() + i, next.tours[a].begin() + j + 1);
        out.push_back(std::move(next));
      }
    }
  }
  return out;
}

std::optional<Domain::ScoredMove> MultiTspDomain::first_gain_move(
    const Instance& instance, const Solution& solution, const std::vector<double>& scores,
    double min_gain, bool inclusive) const {
  const int n = instance.num_points;
  for (std::size_t a = 0; a < solution.tours.size(); ++a) {
    const std::vector<int>& tour = solution.tours[a];
    const int len = static_cast<int>(tour.size());
    for (int i = 1; i + 1 < len; ++i) {
      const int prev = tour[i - 1];
      const int b = tour[i];
      for (int j = i + 1; j + 1 < len; ++j) {
        const int c = tour[j];
        const int next_pt = tour[j + 1];
        const double gain = scores[pair_index(n, prev, c)] + scores[pair_index(n, b, next_pt)] -
                            scores[pair_index(n, prev, b)] - scores[pair_index(n, c, next_pt)];
        if (inclusive ? gain >= min_gain : gain > min_gain) {
          Solution next = solution;
          std::reverse(next.tours[a].begin() + i, next.tours[a].begin() + j + 1);
          return ScoredMove{std::move(next), gain};
        }
      }
    }
  }
  return std::nullopt;
}

Solution MultiTspDomain::solve(const Instance& instance, const WeightVec& w) const {
  const int n = instance.num_points;
  const int a_count = static_cast<int>(instance.salesperson_start.size());
  const std::vector<double> scores = entity_scores(instance, w);

  Solution sol;
  sol.tours.resize(a_count);
  std::vector<bool> placed(n, false);
  for (int a = 0; a < a_count; ++a) {
    sol.tours[a] = {instance.salesperson_start[a], instance.salesperson_end[a]};
    placed[instance.salesperson_start[a]] = true;
    placed[instance.salesperson_end[a]] = true;
  }
  std::vector<int> free_points;
  for (int p = 0; p < n; ++p)
    if (!placed[p]) free_points.push_back(p);

  // Cheapest insertion over (point, tour, position) triples.
  while (!free_points.empty()) {
    int best_point = -1, best_tour = -1, best_pos = -1;
    double best_gain = -std::numeric_limits<double>::infinity();
    for (int p : free_points) {
      for (int a = 0; a < a_count; ++a) {
        const auto& tour = sol.tours[a];
        for (std::size_t q = 0; q + 1 < tour.size(); ++q) {
          const double gain = scores[pair_index(n, tour[q], p)] +
                              scores[pair_index(n, p, tour[q + 1])] -
                              scores[pair_index(n, tour[q], tour[q + 1])];
          if (gain > best_gain) {
            best_gain = gain;
            best_point = p;
            best_tour = a;
            best_pos = static_cast<int>(q) + 1;
          }
        }
      }
    }
    sol.tours[best_tour].insert(sol.tours[best_tour].begin() + best_pos, best_point);
    free_points.erase(std::find(free_points.begin(), free_points.end(), best_point));
  }

  // Intra-tour 2-opt to a local optimum.
  for (;;) {
    auto move = first_gain_move(instance, sol, scores, 0.0, /*inclusive=*/false);
    if (!move) break;
    sol = std::move(move->next);
  }
  return sol;
}

}  // namespace colearn
