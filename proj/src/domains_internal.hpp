#pragma once

#include "colearn/domain.hpp"

namespace colearn {

// Monotone corner-to-corner paths on a hypercube; entities are the directed
// edges usable on such paths, solutions are axis permutations.
class PathPlanningDomain final : public Domain {
 public:
  explicit PathPlanningDomain(DomainConfig config);

  Instance generate_instance(const TrueModel& truth, Rng& rng) const override;
  FeatureVec feature_map(const Instance&, const Solution&, bool include_hidden) const override;
  double feature_bound() const override;
  std::vector<Solution> neighborhood(const Instance&, const Solution&) const override;
  Solution solve(const Instance&, const WeightVec& w) const override;
  std::optional<ScoredMove> first_gain_move(const Instance&, const Solution&,
                                            const std::vector<double>& scores, double min_gain,
                                            bool inclusive) const override;
  void check_solution(const Instance&, const Solution&) const override;

  static int edge_count(int cube_dim);

 private:
  // Row of directed edge (node, axis) in the canonical entity order: nodes
  // ascending, unset axes ascending within a node. -1 where the bit is set.
  std::vector<int> edge_table_;
};

// Closed tours over fully connected points; entities are undirected edges
// (i < j) in lexicographic order.
class TspDomain final : public Domain {
 public:
  explicit TspDomain(DomainConfig config);

  Instance generate_instance(const TrueModel& truth, Rng& rng) const override;
  FeatureVec feature_map(const Instance&, const Solution&, bool include_hidden) const override;
  double feature_bound() const override;
  std::vector<Solution> neighborhood(const Instance&, const Solution&) const override;
  Solution solve(const Instance&, const WeightVec& w) const override;
  std::optional<ScoredMove> first_gain_move(const Instance&, const Solution&,
                                            const std::vector<double>& scores, double min_gain,
                                            bool inclusive) const override;
  void check_solution(const Instance&, const Solution&) const override;
};

// Open per-salesperson paths with fixed start/end points covering all points;
// shares the undirected edge table layout with TspDomain.
class MultiTspDomain final : public Domain {
 public:
  explicit MultiTspDomain(DomainConfig config);

  Instance generate_instance(const TrueModel& truth, Rng& rng) const override;
  FeatureVec feature_map(const Instance&, const Solution&, bool include_hidden) const override;
  double feature_bound() const override;
  std::vector<Solution> neighborhood(const Instance&, const Solution&) const override;
  Solution solve(const Instance&, const WeightVec& w) const override;
  std::optional<ScoredMove> first_gain_move(const Instance&, const Solution&,
                                            const std::vector<double>& scores, double min_gain,
                                            bool inclusive) const override;
  void check_solution(const Instance&, const Solution&) const override;
};

// Document orderings scored with a position discount; entities are documents.
class RankingDomain final : public Domain {
 public:
  explicit RankingDomain(DomainConfig config);

  Instance generate_instance(const TrueModel& truth, Rng& rng) const override;
  FeatureVec feature_map(const Instance&, const Solution&, bool include_hidden) const override;
  double feature_bound() const override;
  std::vector<Solution> neighborhood(const Instance&, const Solution&) const override;
  Solution solve(const Instance&, const WeightVec& w) const override;
  std::optional<ScoredMove> first_gain_move(const Instance&, const Solution&,
                                            const std::vector<double>& scores, double min_gain,
                                            bool inclusive) const override;
  void check_solution(const Instance&, const Solution&) const override;

  // Position weight gamma(i) = 1 / log2(i + 2), i counted from 0.
  static double position_weight(int i);
};

// Shared helper: fill a feature row with uniform [0,1) draws.
FeatureVec draw_feature_row(int dim, Rng& rng);

// Truncate-or-keep helper for the include_hidden flag.
FeatureVec finish_feature_sum(FeatureVec full, int visible_dim, bool include_hidden);

}  // namespace colearn
