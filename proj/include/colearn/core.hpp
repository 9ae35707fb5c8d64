#pragma once

#include <optional>
#include <string>
#include <vector>

namespace colearn {

using FeatureVec = std::vector<double>;
using WeightVec = std::vector<double>;

// The four online update rules. PER/CSPER are perceptron-style with a fixed
// or cost-scaled rate; PA/CSPA solve for the smallest weight change that puts
// the improved solution ahead of the candidate by a target margin.
enum class UpdateRule { Per, CsPer, Pa, CsPa };

const char* to_string(UpdateRule rule);
std::optional<UpdateRule> parse_rule(const std::string& name);

struct UpdateParams {
  UpdateRule rule = UpdateRule::Per;
  double margin = 1.0;  // PA target margin; must stay positive for PA
};

// One round's update material: delta = phi(improved) - phi(candidate),
// the cost that drove the update, and the learning rate that was applied.
struct DeltaRecord {
  FeatureVec delta;
  int update_cost = 0;
  double lambda = 0.0;
};

double dot(const WeightVec& w, const FeatureVec& phi);
double norm(const FeatureVec& v);

/// Estimated utility w . phi. Throws DimensionError on mismatched sizes.
double predict_utility(const WeightVec& w, const FeatureVec& phi);

/// Componentwise phi_improved - phi_candidate.
FeatureVec compute_delta(const FeatureVec& phi_improved, const FeatureVec& phi_candidate);

/// Learning rate for one update. Requires cost > 0; PA/CSPA additionally
/// require a nonzero delta (DegenerateDeltaError otherwise).
///   PER   -> 1
///   CSPER -> cost
///   PA    -> (margin - w.delta) / |delta|^2
///   CSPA  -> (cost - w.delta) / |delta|^2
double learning_rate(const UpdateParams& params, const WeightVec& w, const FeatureVec& delta,
                     int cost);

/// One application of the coactive update schema: identity when cost = 0,
/// otherwise w + lambda * delta. After a PA update the new weights satisfy
/// w'.delta = margin exactly; after CSPA, w'.delta = cost.
WeightVec coactive_update(const WeightVec& w, const FeatureVec& delta, int cost,
                          const UpdateParams& params);

}  // namespace colearn
