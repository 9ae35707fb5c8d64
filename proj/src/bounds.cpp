#include "colearn/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "colearn/error.hpp"

namespace colearn {
namespace {

constexpr double kTolerance = 1e-9;

void validate(const BoundInputs& inputs) {
  if (inputs.rounds < 1) throw ConfigError("bounds: rounds must be at least 1");
  if (!(inputs.kappa > 0.0)) throw ConfigError("bounds: kappa must be positive");
  if (inputs.feature_bound < 0.0 || inputs.w_star_norm < 0.0 || inputs.xi_sum < 0.0 ||
      inputs.xi_cost_sum < 0.0)
    throw ConfigError("bounds: inputs must be nonnegative");
}

}  // namespace

double realizable_bound(UpdateRule rule, const BoundInputs& inputs) {
  validate(inputs);
  const double r = inputs.feature_bound;
  const double w = inputs.w_star_norm;
  const double kappa = inputs.kappa;
  const double t = static_cast<double>(inputs.rounds);
  switch (rule) {
    case UpdateRule::Per:
      return 2.0 * r * w / (kappa * std::sqrt(t));
    case UpdateRule::CsPer:
      return 4.0 * r * r * w * w / (kappa * kappa * t);
    case UpdateRule::Pa:
    case UpdateRule::CsPa:
      return 4.0 * r * r * w * w / (kappa * kappa * std::sqrt(t));
  }
  throw std::logic_error("realizable_bound: unknown rule");
}

double noisy_bound(UpdateRule rule, const BoundInputs& inputs) {
  validate(inputs);
  const double r = inputs.feature_bound;
  const double w = inputs.w_star_norm;
  const double kappa = inputs.kappa;
  const double t = static_cast<double>(inputs.rounds);
  switch (rule) {
    case UpdateRule::Per:
      return 2.0 * r * w / (kappa * std::sqrt(t)) + inputs.xi_sum / (kappa * t);
    case UpdateRule::CsPer:
      return 4.0 * r * r * w * w / (kappa * kappa * t) +
             4.0 * r * w / (kappa * kappa * t) * std::sqrt(inputs.xi_cost_sum) +
             inputs.xi_cost_sum / (kappa * kappa * t);
    case UpdateRule::Pa:
    case UpdateRule::CsPa:
      throw UnsupportedRuleError("noisy_bound: no noisy bound for the PA family");
  }
  throw std::logic_error("noisy_bound: unknown rule");
}

double compute_xi(int update_cost, double true_visible_gain, double kappa) {
  if (update_cost <= 0) throw ConfigError("compute_xi: requires update_cost > 0");
  return std::max(0.0, kappa * update_cost - true_visible_gain);
}

BoundReport check_run(const RunLog& log, const BoundInputs& base, bool noisy) {
  if (noisy && (log.rule == UpdateRule::Pa || log.rule == UpdateRule::CsPa))
    throw UnsupportedRuleError("check_run: no noisy bound for the PA family");
  const bool squared = log.rule == UpdateRule::CsPer || log.rule == UpdateRule::CsPa;
  const double constant_cap = 4.0 * base.feature_bound * base.feature_bound * base.w_star_norm *
                              base.w_star_norm / (base.kappa * base.kappa);
  BoundReport report;
  report.rule = log.rule;
  report.noisy = noisy;
  report.rows.reserve(log.rows.size());
  double xi_sum = 0.0;
  double xi_cost_sum = 0.0;
  for (const RunRow& row : log.rows) {
    xi_sum += row.xi;
    xi_cost_sum += row.xi * row.cost_update;
    const int t_count = row.t + 1;
    BoundInputs inputs = base;
    inputs.rounds = t_count;
    inputs.xi_sum = xi_sum;
    inputs.xi_cost_sum = xi_cost_sum;
    BoundRow out;
    const double avg_update = static_cast<double>(row.cum_cost_update) / t_count;
    const double avg_sq_update = static_cast<double>(row.cum_sq_cost_update) / t_count;
    if (avg_update > avg_sq_update + kTolerance)
      throw std::logic_error("check_run: average cost exceeds average squared cost");
    out.empirical = squared ? avg_sq_update : avg_update;
    out.bound_value = noisy ? noisy_bound(log.rule, inputs) : realizable_bound(log.rule, inputs);
    out.satisfied = out.empirical <= out.bound_value + kTolerance;
    out.empirical_reported = static_cast<double>(row.cum_cost_reported) / t_count;
    out.satisfied_reported = out.empirical_reported <= out.bound_value + kTolerance;
    report.all_satisfied = report.all_satisfied && out.satisfied;
    if (log.rule == UpdateRule::CsPer &&
        static_cast<double>(row.cum_sq_cost_update) > constant_cap + kTolerance)
      report.csper_constant_ok = false;
    report.rows.push_back(out);
  }
  return report;
}

}  // namespace colearn
