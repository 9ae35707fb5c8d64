#include "colearn/core.hpp"

#include <cmath>
#include <string>

#include "colearn/error.hpp"

namespace colearn {

const char* to_string(UpdateRule rule) {
  switch (rule) {
    case UpdateRule::Per:
      return "per";
    case UpdateRule::CsPer:
      return "csper";
    case UpdateRule::Pa:
      return "pa";
    case UpdateRule::CsPa:
      return "cspa";
  }
  return "?";
}

std::optional<UpdateRule> parse_rule(const std::string& name) {
  if (name == "per") return UpdateRule::Per;
  if (name == "csper") return UpdateRule::CsPer;
  if (name == "pa") return UpdateRule::Pa;
  if (name == "cspa") return UpdateRule::CsPa;
  return std::nullopt;
}

double dot(const WeightVec& w, const FeatureVec& phi) {
  if (w.size() != phi.size())
    throw DimensionError("dot: dimension mismatch (" + std::to_string(w.size()) + " vs " +
                         std::to_string(phi.size()) + ")");
  double acc = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * phi[i];
  return acc;
}

double norm(const FeatureVec& v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return std::sqrt(acc);
}

double predict_utility(const WeightVec& w, const FeatureVec& phi) { return dot(w, phi); }

FeatureVec compute_delta(const FeatureVec& phi_improved, const FeatureVec& phi_candidate) {
  if (phi_improved.size() != phi_candidate.size())
    throw DimensionError("compute_delta: dimension mismatch");
  FeatureVec out(phi_improved.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = phi_improved[i] - phi_candidate[i];
  return out;
}

double learning_rate(const UpdateParams& params, const WeightVec& w, const FeatureVec& delta,
                     int cost) {
  if (cost <= 0)
    throw std::invalid_argument("learning_rate: requires cost > 0, caller must skip cost-0 rounds");
  switch (params.rule) {
    case UpdateRule::Per:
      return 1.0;
    case UpdateRule::CsPer:
      return static_cast<double>(cost);
    case UpdateRule::Pa:
    case UpdateRule::CsPa: {
      double sq = 0.0;
      for (double x : delta) sq += x * x;
      if (sq == 0.0)
        throw DegenerateDeltaError("learning_rate: zero delta with positive cost");
      if (params.rule == UpdateRule::Pa && !(params.margin > 0.0))
        throw ConfigError("learning_rate: PA margin must be positive");
      const double target =
          params.rule == UpdateRule::Pa ? params.margin : static_cast<double>(cost);
      return (target - dot(w, delta)) / sq;
    }
  }
  throw std::logic_error("learning_rate: unknown rule");
}

WeightVec coactive_update(const WeightVec& w, const FeatureVec& delta, int cost,
                          const UpdateParams& params) {
  if (cost <= 0) return w;  // passive: the expert was satisfied
  const double lambda = learning_rate(params, w, delta, cost);
  if (w.size() != delta.size())
    throw DimensionError("coactive_update: dimension mismatch");
  WeightVec out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[i] + lambda * delta[i];
  return out;
}

}  // namespace colearn
