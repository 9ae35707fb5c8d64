#include "colearn/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "colearn/error.hpp"

namespace colearn {
namespace {

constexpr double kSlack = 1e-9;

void guard(long long count, const EnumerationLimit& limit) {
  if (count > limit.max_solutions)
    throw EnumerationLimitError("enumerate_solutions: solution space exceeds limit of " +
                                std::to_string(limit.max_solutions));
}

std::vector<Solution> enumerate_permutation_orders(int n, const EnumerationLimit& limit) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Solution> out;
  do {
    guard(static_cast<long long>(out.size()) + 1, limit);
    out.push_back(Solution{order, {}});
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

std::vector<Solution> enumerate_tours(int n, const EnumerationLimit& limit) {
  // Canonical cyclic form: fixed first point, direction with the smaller
  // second point. Each undirected tour appears exactly once.
  std::vector<int> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 1);
  std::vector<Solution> out;
  do {
    if (n > 2 && rest.front() > rest.back()) continue;
    guard(static_cast<long long>(out.size()) + 1, limit);
    Solution sol;
    sol.order.reserve(n);
    sol.order.push_back(0);
    sol.order.insert(sol.order.end(), rest.begin(), rest.end());
    out.push_back(std::move(sol));
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

void enumerate_multi_tours(const Instance& instance, const std::vector<int>& free_points,
                           std::size_t next, Solution& partial, std::vector<Solution>& out,
                           const EnumerationLimit& limit) {
  if (next == free_points.size()) {
    guard(static_cast<long long>(out.size()) + 1, limit);
    out.push_back(partial);
    return;
  }
  const int point = free_points[next];
  for (auto& tour : partial.tours) {
    for (std::size_t pos = 1; pos < tour.size(); ++pos) {
      tour.insert(tour.begin() + pos, point);
      enumerate_multi_tours(instance, free_points, next + 1, partial, out, limit);
      tour.erase(tour.begin() + pos);
    }
  }
}

}  // namespace

std::vector<Solution> enumerate_solutions(const Instance& instance,
                                          const EnumerationLimit& limit) {
  switch (instance.kind) {
    case DomainKind::PathPlanning:
      return enumerate_permutation_orders(instance.cube_dim, limit);
    case DomainKind::Tsp:
      return enumerate_tours(instance.num_points, limit);
    case DomainKind::Ranking:
      return enumerate_permutation_orders(static_cast<int>(instance.features.size()), limit);
    case DomainKind::MultiTsp: {
      std::vector<bool> fixed(instance.num_points, false);
      Solution base;
      for (std::size_t a = 0; a < instance.salesperson_start.size(); ++a) {
        base.tours.push_back({instance.salesperson_start[a], instance.salesperson_end[a]});
        fixed[instance.salesperson_start[a]] = true;
        fixed[instance.salesperson_end[a]] = true;
      }
      std::vector<int> free_points;
      for (int p = 0; p < instance.num_points; ++p)
        if (!fixed[p]) free_points.push_back(p);
      std::vector<Solution> out;
      enumerate_multi_tours(instance, free_points, 0, base, out, limit);
      return out;
    }
  }
  throw ConfigError("enumerate_solutions: unknown domain kind");
}

Solution global_optimum(const Domain& domain, const Instance& instance, const WeightVec& w,
                        const EnumerationLimit& limit) {
  const std::vector<Solution> all = enumerate_solutions(instance, limit);
  if (all.empty()) throw EnumerationLimitError("global_optimum: empty solution space");
  const Solution* best = &all.front();
  double best_utility = solution_utility(domain, instance, all.front(), w);
  for (const Solution& candidate : all) {
    const double utility = solution_utility(domain, instance, candidate, w);
    if (utility > best_utility) {
      best_utility = utility;
      best = &candidate;
    }
  }
  return *best;
}

bool certify_local_optimum(const Domain& domain, const Instance& instance,
                           const Solution& solution, const WeightVec& w, double threshold) {
  const double base = solution_utility(domain, instance, solution, w);
  for (const Solution& neighbor : domain.neighborhood(instance, solution)) {
    if (solution_utility(domain, instance, neighbor, w) > base + threshold + kSlack) return false;
  }
  return true;
}

bool validate_trace(const Domain& domain, const Instance& instance, const ImprovementTrace& trace,
                    const WeightVec& w_star_full, double kappa) {
  if (trace.steps.empty() || trace.steps.size() != trace.true_utilities.size()) return false;
  double previous = solution_utility(domain, instance, trace.steps.front(), w_star_full);
  for (std::size_t i = 1; i < trace.steps.size(); ++i) {
    const std::vector<Solution> neighbors = domain.neighborhood(instance, trace.steps[i - 1]);
    if (std::find(neighbors.begin(), neighbors.end(), trace.steps[i]) == neighbors.end())
      return false;
    const double current = solution_utility(domain, instance, trace.steps[i], w_star_full);
    if (current - previous < kappa - kSlack) return false;
    previous = current;
  }
  return true;
}

}  // namespace colearn
