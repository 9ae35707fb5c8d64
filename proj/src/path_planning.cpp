#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>

#include "colearn/error.hpp"
#include "domains_internal.hpp"

namespace colearn {
namespace {

// Non-identity permutations of a 3-move window, in the lexicographic order of
// all six permutations with the identity dropped.
constexpr std::array<std::array<int, 3>, 5> kWindowPerms = {{
    {0, 2, 1},
    {1, 0, 2},
    {1, 2, 0},
    {2, 0, 1},
    {2, 1, 0},
}};

std::vector<unsigned> prefix_nodes(const std::vector<int>& moves) {
  std::vector<unsigned> nodes(moves.size() + 1);
  nodes[0] = 0;
  for (std::size_t i = 0; i < moves.size(); ++i) nodes[i + 1] = nodes[i] | (1u << moves[i]);
  return nodes;
}

// Row lookup table for directed edges (node, axis); -1 where the axis is
// already set. Built once per domain, the scans hit it constantly.
std::vector<int> build_edge_table(int k) {
  std::vector<int> table(static_cast<std::size_t>(1u << k) * k, -1);
  int next = 0;
  for (unsigned node = 0; node < (1u << k); ++node)
    for (int axis = 0; axis < k; ++axis)
      if (!(node & (1u << axis))) table[node * k + axis] = next++;
  return table;
}

}  // namespace

PathPlanningDomain::PathPlanningDomain(DomainConfig config) : Domain(config) {
  if (config_.cube_dim < 1 || config_.cube_dim > 16)
    throw ConfigError("PathPlanningDomain: cube_dim must be in [1,16]");
  edge_table_ = build_edge_table(config_.cube_dim);
}

int PathPlanningDomain::edge_count(int cube_dim) { return cube_dim << (cube_dim - 1); }

Instance PathPlanningDomain::generate_instance(const TrueModel&, Rng& rng) const {
  const int k = config_.cube_dim;
  const int full_dim = config_.visible_dim + config_.hidden_dim;
  Instance inst;
  inst.kind = DomainKind::PathPlanning;
  inst.visible_dim = config_.visible_dim;
  inst.hidden_dim = config_.hidden_dim;
  inst.cube_dim = k;
  inst.features.reserve(edge_count(k));
  for (unsigned node = 0; node < (1u << k); ++node)
    for (int axis = 0; axis < k; ++axis)
      if (!(node & (1u << axis))) inst.features.push_back(draw_feature_row(full_dim, rng));
  return inst;
}

void PathPlanningDomain::check_solution(const Instance& instance, const Solution& solution) const {
  const int k = instance.cube_dim;
  if (!solution.tours.empty() || static_cast<int>(solution.order.size()) != k)
    throw ConfigError("path planning solution: expected a permutation of the axes");
  std::vector<bool> seen(k, false);
  for (int m : solution.order) {
    if (m < 0 || m >= k || seen[m])
      throw ConfigError("path planning solution: moves must be a permutation of the axes");
    seen[m] = true;
  }
}

FeatureVec PathPlanningDomain::feature_map(const Instance& instance, const Solution& solution,
                                           bool include_hidden) const {
  check_solution(instance, solution);
  const int k = instance.cube_dim;
  FeatureVec sum(instance.visible_dim + instance.hidden_dim, 0.0);
  unsigned node = 0;
  for (int step = 0; step < k; ++step) {
    const int axis = solution.order[step];
    const FeatureVec& row = instance.features[edge_table_[node * k + axis]];
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += row[i];
    node |= 1u << axis;
  }
  return finish_feature_sum(std::move(sum), instance.visible_dim, include_hidden);
}

double PathPlanningDomain::feature_bound() const {
  return config_.cube_dim * std::sqrt(static_cast<double>(config_.visible_dim));
}

std::vector<Solution> PathPlanningDomain::neighborhood(const Instance& instance,
                                                       const Solution& solution) const {
  check_solution(instance, solution);
  const int k = instance.cube_dim;
  std::vector<Solution> out;
  if (k < 3) return out;
  out.reserve(static_cast<std::size_t>(k - 2) * kWindowPerms.size());
  for (int p = 0; p + 2 < k; ++p) {
    for (const auto& perm : kWindowPerms) {
      Solution next = solution;
      for (int s = 0; s < 3; ++s) next.order[p + s] = solution.order[p + perm[s]];
      out.push_back(std::move(next));
    }
  }
  return out;
}

std::optional<Domain::ScoredMove> PathPlanningDomain::first_gain_move(
    const Instance& instance, const Solution& solution, const std::vector<double>& scores,
    double min_gain, bool inclusive) const {
  const int k = instance.cube_dim;
  if (k < 3) return std::nullopt;
  const std::vector<unsigned> nodes = prefix_nodes(solution.order);
  for (int p = 0; p + 2 < k; ++p) {
    double old_sum = 0.0;
    for (int s = 0; s < 3; ++s)
      old_sum += scores[edge_table_[nodes[p + s] * k + solution.order[p + s]]];
    for (const auto& perm : kWindowPerms) {
      unsigned node = nodes[p];
      double new_sum = 0.0;
      for (int s = 0; s < 3; ++s) {
        const int axis = solution.order[p + perm[s]];
        new_sum += scores[edge_table_[node * k + axis]];
        node |= 1u << axis;
      }
      const double gain = new_sum - old_sum;
      if (inclusive ? gain >= min_gain : gain > min_gain) {
        Solution next = solution;
        for (int s = 0; s < 3; ++s) next.order[p + s] = solution.order[p + perm[s]];
        return ScoredMove{std::move(next), gain};
      }
    }
  }
  return std::nullopt;
}

Solution PathPlanningDomain::solve(const Instance& instance, const WeightVec& w) const {
  const int k = instance.cube_dim;
  const std::vector<double> scores = entity_scores(instance, w);
  Solution sol;
  sol.order.reserve(k);
  std::vector<int> remaining(k);
  std::iota(remaining.begin(), remaining.end(), 0);
  unsigned node = 0;
  while (!remaining.empty()) {
    int best_axis = -1;
    double best_value = -std::numeric_limits<double>::infinity();
    for (int a : remaining) {
      double value = scores[edge_table_[node * k + a]];
      if (remaining.size() > 1) {
        const unsigned mid = node | (1u << a);
        double best_second = -std::numeric_limits<double>::infinity();
        for (int b : remaining)
          if (b != a) best_second = std::max(best_second, scores[edge_table_[mid * k + b]]);
        value += best_second;
      }
      if (value > best_value) {
        best_value = value;
        best_axis = a;
      }
    }
    sol.order.push_back(best_axis);
    node |= 1u << best_axis;
    remaining.erase(std::find(remaining.begin(), remaining.end(), best_axis));
  }
  return sol;
}

}  // namespace colearn
