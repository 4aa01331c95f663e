#pragma once

#include "owabp/solvers.hpp"

namespace owabp {

/// Brute-force OWA minimization: enumerates the whole feasible set and
/// evaluates each member. Exists to certify the real solvers on small
/// instances; ties break toward the lexicographically smallest element set.
SolveReport brute_force_owa(const ProblemFamily& fam, const ScenarioMatrix& m,
                            const WeightVector& w,
                            long long budget = kDefaultEnumerationBudget);

/// Brute-force bottleneck minimization over the enumerated feasible set.
std::optional<BottleneckResult> brute_force_bottleneck(
    const ProblemFamily& fam, const CostVector& costs,
    long long budget = kDefaultEnumerationBudget);

}  // namespace owabp
