#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "colearn/core.hpp"
#include "colearn/rng.hpp"

namespace colearn {

enum class DomainKind { PathPlanning, Tsp, MultiTsp, Ranking };

const char* to_string(DomainKind kind);
std::optional<DomainKind> parse_domain_kind(const std::string& name);

struct DomainConfig {
  DomainKind kind = DomainKind::Tsp;
  int visible_dim = 10;
  int hidden_dim = 0;  // > 0 selects the noisy setting (expert-only features)
  double kappa = 0.1;
  int cube_dim = 7;          // PathPlanning: hypercube dimension
  int num_points = 20;       // Tsp / MultiTsp
  int num_salespersons = 4;  // MultiTsp
  int list_length = 20;      // Ranking: documents per query
  std::uint64_t rng_seed = 0;
};

// One problem instance. `features` is the per-entity raw feature table
// (rows are directed hypercube edges, undirected point-pair edges, or
// documents, in the domain's canonical entity order), every value in [0,1],
// each row of full dimension visible_dim + hidden_dim.
struct Instance {
  DomainKind kind = DomainKind::Tsp;
  int visible_dim = 0;
  int hidden_dim = 0;
  std::vector<FeatureVec> features;

  int cube_dim = 0;                          // PathPlanning
  int num_points = 0;                        // Tsp / MultiTsp
  std::vector<int> salesperson_start;        // MultiTsp
  std::vector<int> salesperson_end;          // MultiTsp
  std::vector<int> relevance;                // Ranking: labels 0..4 per document

  bool operator==(const Instance&) const = default;
};

// Domain-specific solution structure. `order` holds the move permutation
// (PathPlanning), the cyclic tour (Tsp) or the document ordering (Ranking);
// `tours` holds MultiTsp per-salesperson sequences including the fixed
// start/end points.
struct Solution {
  std::vector<int> order;
  std::vector<std::vector<int>> tours;

  bool operator==(const Solution&) const = default;
};

// Hidden true utility weights over visible + hidden dimensions.
struct TrueModel {
  WeightVec w_star_full;

  WeightVec visible(int visible_dim) const;
  double visible_norm(int visible_dim) const;
};

// Magnitudes drawn i.i.d. uniform from [0,1]; routing domains get negative
// signs so that shorter weighted paths carry higher utility, ranking keeps
// positive relevance weights.
TrueModel draw_true_model(const DomainConfig& config, Rng& rng);

class Domain {
 public:
  explicit Domain(DomainConfig config);
  virtual ~Domain();

  const DomainConfig& config() const { return config_; }
  DomainKind kind() const { return config_.kind; }

  /// Deterministic instance generation. The true model is consulted only by
  /// the ranking domain, which derives relevance labels from it.
  virtual Instance generate_instance(const TrueModel& truth, Rng& rng) const = 0;

  /// Joint feature vector of (instance, solution): edge-feature sums for the
  /// routing domains, discounted per-position document sums for ranking.
  /// Hidden coordinates are appended when include_hidden is set.
  virtual FeatureVec feature_map(const Instance& instance, const Solution& solution,
                                 bool include_hidden) const = 0;

  /// Analytic bound R with |feature_map(.)| <= R over the visible dimensions.
  virtual double feature_bound() const = 0;

  /// All one-operator neighbors in canonical enumeration order.
  virtual std::vector<Solution> neighborhood(const Instance& instance,
                                             const Solution& solution) const = 0;

  /// Locally optimal construction under w: lookahead / cheapest insertion /
  /// score sort per domain, with the routing solvers finishing on their own
  /// improvement loop.
  virtual Solution solve(const Instance& instance, const WeightVec& w) const = 0;

  /// Per-entity utilities w . row, over the first w.size() coordinates.
  /// w must be either visible-dim or full-dim.
  std::vector<double> entity_scores(const Instance& instance, const WeightVec& w) const;

  struct ScoredMove {
    Solution next;
    double gain;
  };

  /// First neighbor in canonical order whose utility gain (under the given
  /// entity scores) passes min_gain; the test is strict (>) by default and
  /// inclusive (>=) when `inclusive` is set. Returns nullopt at a fixed point.
  virtual std::optional<ScoredMove> first_gain_move(const Instance& instance,
                                                    const Solution& solution,
                                                    const std::vector<double>& scores,
                                                    double min_gain, bool inclusive) const = 0;

  /// Throws a structural error unless the solution satisfies the domain's
  /// invariants for this instance.
  virtual void check_solution(const Instance& instance, const Solution& solution) const = 0;

 protected:
  DomainConfig config_;
};

std::unique_ptr<Domain> make_domain(const DomainConfig& config);

/// First-improvement local search: repeatedly move to the first neighbor in
/// canonical order improving utility by more than `threshold`, until no such
/// neighbor exists. Utility is w over the visible features when w has the
/// visible dimension, or over all features when it has the full dimension.
Solution local_search(const Domain& domain, const Instance& instance, Solution start,
                      const WeightVec& w, double threshold);

/// Analytic feature-norm bound for a config, without instantiating a domain.
double compute_feature_bound(const DomainConfig& config);

/// w . feature_map, over visible features when w has the visible dimension
/// and over all features when it has the full dimension.
double solution_utility(const Domain& domain, const Instance& instance, const Solution& solution,
                        const WeightVec& w);

}  // namespace colearn
