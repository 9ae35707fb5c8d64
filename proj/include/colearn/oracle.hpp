#pragma once

#include <vector>

#include "colearn/domain.hpp"
#include "colearn/expert.hpp"

namespace colearn {

struct EnumerationLimit {
  long long max_solutions = 50'000;
};

/// Exhaustive, duplicate-free enumeration of every valid solution of an
/// instance. Cyclic tours are enumerated in canonical form (point 0 first,
/// lower-indexed second point before the reflected direction). Throws
/// EnumerationLimitError when the space exceeds the limit.
std::vector<Solution> enumerate_solutions(const Instance& instance,
                                          const EnumerationLimit& limit = {});

/// Argmax of w . feature_map over the full enumeration, ties resolved by
/// enumeration order.
Solution global_optimum(const Domain& domain, const Instance& instance, const WeightVec& w,
                        const EnumerationLimit& limit = {});

/// Certifies that no neighbor improves the utility by more than
/// threshold (+1e-9 slack for float reassociation). This is a direct
/// neighborhood scan, independent of the local_search acceptance loop it is
/// used to check.
bool certify_local_optimum(const Domain& domain, const Instance& instance,
                           const Solution& solution, const WeightVec& w, double threshold);

/// Checks the improvement contract of a trace: every step is a neighborhood
/// member of its predecessor and every true-utility gain is at least kappa
/// (with 1e-9 slack). Ranking traces follow a label protocol instead and are
/// generally not kappa-monotone.
bool validate_trace(const Domain& domain, const Instance& instance, const ImprovementTrace& trace,
                    const WeightVec& w_star_full, double kappa);

}  // namespace colearn
