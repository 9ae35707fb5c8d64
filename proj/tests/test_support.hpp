#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "colearn/domain.hpp"
#include "colearn/rng.hpp"

namespace colearn::testing {

inline void shuffle_ints(std::vector<int>& values, Rng& rng) {
  for (int i = static_cast<int>(values.size()) - 1; i > 0; --i)
    std::swap(values[i], values[uniform_int(rng, 0, i)]);
}

// Uniform-ish valid solution for property tests; structure only, no utility.
inline Solution random_solution(const Instance& instance, Rng& rng) {
  Solution sol;
  switch (instance.kind) {
    case DomainKind::PathPlanning: {
      sol.order.resize(instance.cube_dim);
      std::iota(sol.order.begin(), sol.order.end(), 0);
      shuffle_ints(sol.order, rng);
      return sol;
    }
    case DomainKind::Tsp: {
      sol.order.resize(instance.num_points);
      std::iota(sol.order.begin(), sol.order.end(), 0);
      shuffle_ints(sol.order, rng);
      return sol;
    }
    case DomainKind::Ranking: {
      sol.order.resize(instance.features.size());
      std::iota(sol.order.begin(), sol.order.end(), 0);
      shuffle_ints(sol.order, rng);
      return sol;
    }
    case DomainKind::MultiTsp: {
      const int a_count = static_cast<int>(instance.salesperson_start.size());
      std::vector<bool> fixed(instance.num_points, false);
      for (int a = 0; a < a_count; ++a) {
        sol.tours.push_back({instance.salesperson_start[a], instance.salesperson_end[a]});
        fixed[instance.salesperson_start[a]] = true;
        fixed[instance.salesperson_end[a]] = true;
      }
      std::vector<int> free_points;
      for (int p = 0; p < instance.num_points; ++p)
        if (!fixed[p]) free_points.push_back(p);
      shuffle_ints(free_points, rng);
      for (int p : free_points) {
        const int a = uniform_int(rng, 0, a_count - 1);
        const int pos = uniform_int(rng, 1, static_cast<int>(sol.tours[a].size()) - 1);
        sol.tours[a].insert(sol.tours[a].begin() + pos, p);
      }
      return sol;
    }
  }
  return sol;
}

// Unit-square TSP instance with the single feature per edge equal to the
// Euclidean length; corners 0..3 in cyclic order.
inline Instance unit_square_tsp() {
  const double diag = std::sqrt(2.0);
  Instance inst;
  inst.kind = DomainKind::Tsp;
  inst.visible_dim = 1;
  inst.hidden_dim = 0;
  inst.num_points = 4;
  // Edge rows in (i,j) lexicographic order: 01,02,03,12,13,23.
  inst.features = {{1.0}, {diag}, {1.0}, {1.0}, {diag}, {1.0}};
  return inst;
}

}  // namespace colearn::testing
