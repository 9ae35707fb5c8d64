#include "colearn/domain.hpp"

#include <cmath>

#include "colearn/error.hpp"
#include "domains_internal.hpp"

namespace colearn {

const char* to_string(DomainKind kind) {
  switch (kind) {
    case DomainKind::PathPlanning:
      return "path_planning";
    case DomainKind::Tsp:
      return "tsp";
    case DomainKind::MultiTsp:
      return "multi_tsp";
    case DomainKind::Ranking:
      return "ranking";
  }
  return "?";
}

std::optional<DomainKind> parse_domain_kind(const std::string& name) {
  if (name == "path_planning" || name == "pathplan" || name == "cube")
    return DomainKind::PathPlanning;
  if (name == "tsp") return DomainKind::Tsp;
  if (name == "multi_tsp" || name == "mtsp") return DomainKind::MultiTsp;
  if (name == "ranking" || name == "rank") return DomainKind::Ranking;
  return std::nullopt;
}

WeightVec TrueModel::visible(int visible_dim) const {
  if (visible_dim > static_cast<int>(w_star_full.size()))
    throw DimensionError("TrueModel::visible: visible_dim exceeds full dimension");
  return WeightVec(w_star_full.begin(), w_star_full.begin() + visible_dim);
}

double TrueModel::visible_norm(int visible_dim) const { return norm(visible(visible_dim)); }

TrueModel draw_true_model(const DomainConfig& config, Rng& rng) {
  const int full_dim = config.visible_dim + config.hidden_dim;
  const double sign = config.kind == DomainKind::Ranking ? 1.0 : -1.0;
  TrueModel truth;
  truth.w_star_full.resize(full_dim);
  for (int i = 0; i < full_dim; ++i) truth.w_star_full[i] = sign * uniform01(rng);
  return truth;
}

Domain::Domain(DomainConfig config) : config_(config) {
  if (config_.visible_dim <= 0) throw ConfigError("DomainConfig: visible_dim must be positive");
  if (config_.hidden_dim < 0) throw ConfigError("DomainConfig: hidden_dim must be nonnegative");
  if (!(config_.kappa > 0.0)) throw ConfigError("DomainConfig: kappa must be positive");
}

Domain::~Domain() = default;

std::vector<double> Domain::entity_scores(const Instance& instance, const WeightVec& w) const {
  const std::size_t d = w.size();
  const auto full = static_cast<std::size_t>(instance.visible_dim + instance.hidden_dim);
  if (d != static_cast<std::size_t>(instance.visible_dim) && d != full)
    throw DimensionError("entity_scores: weight dimension is neither visible nor full");
  std::vector<double> scores(instance.features.size());
  for (std::size_t e = 0; e < instance.features.size(); ++e) {
    const FeatureVec& row = instance.features[e];
    double acc = 0.0;
    for (std::size_t i = 0; i < d; ++i) acc += w[i] * row[i];
    scores[e] = acc;
  }
  return scores;
}

std::unique_ptr<Domain> make_domain(const DomainConfig& config) {
  switch (config.kind) {
    case DomainKind::PathPlanning:
      return std::make_unique<PathPlanningDomain>(config);
    case DomainKind::Tsp:
      return std::make_unique<TspDomain>(config);
    case DomainKind::MultiTsp:
      return std::make_unique<MultiTspDomain>(config);
    case DomainKind::Ranking:
      return std::make_unique<RankingDomain>(config);
  }
  throw ConfigError("make_domain: unknown domain kind");
}

Solution local_search(const Domain& domain, const Instance& instance, Solution start,
                      const WeightVec& w, double threshold) {
  if (threshold < 0.0) throw ConfigError("local_search: threshold must be nonnegative");
  const std::vector<double> scores = domain.entity_scores(instance, w);
  Solution current = std::move(start);
  for (;;) {
    auto move = domain.first_gain_move(instance, current, scores, threshold, /*inclusive=*/false);
    if (!move) return current;
    current = std::move(move->next);
  }
}

double compute_feature_bound(const DomainConfig& config) {
  const double sqrt_d = std::sqrt(static_cast<double>(config.visible_dim));
  switch (config.kind) {
    case DomainKind::PathPlanning:
      return config.cube_dim * sqrt_d;
    case DomainKind::Tsp:
      return config.num_points * sqrt_d;
    case DomainKind::MultiTsp:
      return (config.num_points + config.num_salespersons) * sqrt_d;
    case DomainKind::Ranking: {
      double weight_sum = 0.0;
      for (int i = 0; i < config.list_length; ++i) weight_sum += RankingDomain::position_weight(i);
      return weight_sum * sqrt_d;
    }
  }
  throw ConfigError("compute_feature_bound: unknown domain kind");
}

double solution_utility(const Domain& domain, const Instance& instance, const Solution& solution,
                        const WeightVec& w) {
  const auto full = static_cast<std::size_t>(instance.visible_dim + instance.hidden_dim);
  if (w.size() == static_cast<std::size_t>(instance.visible_dim))
    return dot(w, domain.feature_map(instance, solution, /*include_hidden=*/false));
  if (w.size() == full)
    return dot(w, domain.feature_map(instance, solution, /*include_hidden=*/true));
  throw DimensionError("solution_utility: weight dimension is neither visible nor full");
}

FeatureVec draw_feature_row(int dim, Rng& rng) {
  FeatureVec row(dim);
  for (int i = 0; i < dim; ++i) row[i] = uniform01(rng);
  return row;
}

FeatureVec finish_feature_sum(FeatureVec full, int visible_dim, bool include_hidden) {
  if (!include_hidden) full.resize(visible_dim);
  return full;
}

}  // namespace colearn
