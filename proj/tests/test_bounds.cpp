#include "colearn/bounds.hpp"

#include <cmath>

#include "colearn/error.hpp"
#include "colearn/rng.hpp"
#include "doctest.h"

using namespace colearn;

namespace {

BoundInputs unit_inputs(int rounds) {
  BoundInputs inputs;
  inputs.feature_bound = 1.0;
  inputs.w_star_norm = 1.0;
  inputs.kappa = 0.1;
  inputs.rounds = rounds;
  return inputs;
}

RunLog make_log(UpdateRule rule, const std::vector<int>& update_costs) {
  RunLog log;
  log.rule = rule;
  log.feature_bound = 1.0;
  log.w_star_visible_norm = 1.0;
  log.kappa = 0.1;
  long long cum = 0, cum_sq = 0;
  for (std::size_t t = 0; t < update_costs.size(); ++t) {
    RunRow row;
    row.t = static_cast<int>(t);
    row.cost_reported = update_costs[t];
    row.cost_update = update_costs[t];
    cum += update_costs[t];
    cum_sq += static_cast<long long>(update_costs[t]) * update_costs[t];
    row.cum_cost_reported = cum;
    row.cum_cost_update = cum;
    row.cum_sq_cost_update = cum_sq;
    log.rows.push_back(row);
  }
  return log;
}

}  // namespace

TEST_CASE("realizable bound formula values") {
  const BoundInputs inputs = unit_inputs(100);
  CHECK(realizable_bound(UpdateRule::Per, inputs) == doctest::Approx(2.0));
  CHECK(realizable_bound(UpdateRule::CsPer, inputs) == doctest::Approx(4.0));
  CHECK(realizable_bound(UpdateRule::Pa, inputs) == doctest::Approx(40.0));
  CHECK(realizable_bound(UpdateRule::CsPa, inputs) == doctest::Approx(40.0));
}

TEST_CASE("noisy bounds reduce to the realizable bounds at zero noise") {
  for (int rounds : {1, 10, 100, 1000}) {
    const BoundInputs inputs = unit_inputs(rounds);
    CHECK(noisy_bound(UpdateRule::Per, inputs) == realizable_bound(UpdateRule::Per, inputs));
    CHECK(noisy_bound(UpdateRule::CsPer, inputs) == realizable_bound(UpdateRule::CsPer, inputs));
  }
}

TEST_CASE("noisy bounds add the slack terms") {
  BoundInputs inputs = unit_inputs(100);
  inputs.xi_sum = 10.0;
  CHECK(noisy_bound(UpdateRule::Per, inputs) == doctest::Approx(3.0));

  inputs.xi_sum = 0.0;
  inputs.xi_cost_sum = 0.0;
  CHECK(noisy_bound(UpdateRule::CsPer, inputs) == doctest::Approx(4.0));

  inputs.xi_cost_sum = 4.0;
  // 4/(0.01*100) + 4/(0.01*100)*sqrt(4) + 4/(0.01*100) = 4 + 8 + 4
  CHECK(noisy_bound(UpdateRule::CsPer, inputs) == doctest::Approx(16.0));
}

TEST_CASE("no noisy bound exists for the PA family") {
  const BoundInputs inputs = unit_inputs(10);
  CHECK_THROWS_AS(noisy_bound(UpdateRule::Pa, inputs), UnsupportedRuleError);
  CHECK_THROWS_AS(noisy_bound(UpdateRule::CsPa, inputs), UnsupportedRuleError);
}

TEST_CASE("bound input validation") {
  BoundInputs inputs = unit_inputs(0);
  CHECK_THROWS_AS(realizable_bound(UpdateRule::Per, inputs), ConfigError);
  inputs = unit_inputs(10);
  inputs.kappa = 0.0;
  CHECK_THROWS_AS(realizable_bound(UpdateRule::Per, inputs), ConfigError);
  inputs = unit_inputs(10);
  inputs.w_star_norm = -1.0;
  CHECK_THROWS_AS(realizable_bound(UpdateRule::Per, inputs), ConfigError);
}

TEST_CASE("bounds shrink with rounds and grow with R and the comparator norm") {
  Rng rng(21);
  for (UpdateRule rule : {UpdateRule::Per, UpdateRule::CsPer, UpdateRule::Pa, UpdateRule::CsPa}) {
    for (int trial = 0; trial < 100; ++trial) {
      BoundInputs inputs;
      inputs.feature_bound = 0.5 + 10.0 * uniform01(rng);
      inputs.w_star_norm = 0.5 + 5.0 * uniform01(rng);
      inputs.kappa = 0.05 + uniform01(rng);
      inputs.rounds = uniform_int(rng, 1, 500);

      BoundInputs later = inputs;
      later.rounds = inputs.rounds + uniform_int(rng, 1, 100);
      CHECK(realizable_bound(rule, later) < realizable_bound(rule, inputs));

      BoundInputs wider = inputs;
      wider.feature_bound *= 1.5;
      CHECK(realizable_bound(rule, wider) > realizable_bound(rule, inputs));

      BoundInputs heavier = inputs;
      heavier.w_star_norm *= 2.0;
      CHECK(realizable_bound(rule, heavier) > realizable_bound(rule, inputs));
    }
  }
}

TEST_CASE("compute_xi is the smallest feasible slack") {
  CHECK(compute_xi(1, 0.05, 0.1) == doctest::Approx(0.05));
  CHECK(compute_xi(1, 0.5, 0.1) == 0.0);
  CHECK(compute_xi(3, 0.1, 0.1) == doctest::Approx(0.2));
  CHECK_THROWS_AS(compute_xi(0, 0.1, 0.1), ConfigError);
}

TEST_CASE("an all-zero-cost run satisfies every bound") {
  for (UpdateRule rule : {UpdateRule::Per, UpdateRule::CsPer, UpdateRule::Pa, UpdateRule::CsPa}) {
    const RunLog log = make_log(rule, std::vector<int>(50, 0));
    BoundInputs inputs = unit_inputs(50);
    const BoundReport report = check_run(log, inputs, false);
    CHECK(report.all_satisfied);
    CHECK(report.rows.size() == 50);
    for (const BoundRow& row : report.rows) CHECK(row.satisfied);
  }
}

TEST_CASE("an absurd injected cost is flagged as a violation") {
  std::vector<int> costs(20, 0);
  costs[5] = 1'000'000;
  const RunLog log = make_log(UpdateRule::Per, costs);
  const BoundReport report = check_run(log, unit_inputs(20), false);
  CHECK_FALSE(report.all_satisfied);
  CHECK_FALSE(report.rows[5].satisfied);
  CHECK(report.rows[4].satisfied);
}

TEST_CASE("csper running constant flag trips when the cumulative square sum escapes") {
  // Cap is 4 R^2 |w*|^2 / kappa^2 = 400 for the unit inputs.
  const RunLog small = make_log(UpdateRule::CsPer, {10, 10, 10});  // sum of squares 300
  CHECK(check_run(small, unit_inputs(3), false).csper_constant_ok);
  const RunLog big = make_log(UpdateRule::CsPer, {10, 10, 10, 11});  // 421
  CHECK_FALSE(check_run(big, unit_inputs(4), false).csper_constant_ok);
}

TEST_CASE("noisy check refuses the PA family") {
  const RunLog log = make_log(UpdateRule::Pa, {1, 2});
  CHECK_THROWS_AS(check_run(log, unit_inputs(2), true), UnsupportedRuleError);
}

TEST_CASE("noisy check consumes per-round xi prefixes") {
  RunLog log = make_log(UpdateRule::Per, {1, 1, 1});
  for (RunRow& row : log.rows) row.xi = 0.2;
  const BoundReport report = check_run(log, unit_inputs(3), true);
  // At t=2: bound = 2/(0.1*sqrt(3)) + 0.6/(0.1*3).
  CHECK(report.rows[2].bound_value ==
        doctest::Approx(2.0 / (0.1 * std::sqrt(3.0)) + 0.6 / 0.3));
}
