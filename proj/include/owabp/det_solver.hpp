#pragma once

#include <optional>

#include "owabp/feasibility.hpp"

namespace owabp {

struct BottleneckResult {
  Solution solution;
  Cost value;               // max element cost inside solution; tight threshold
  long long oracle_calls;   // feasibility queries issued
};

/// Minimizes the maximum element cost over the feasible set. Binary-searches
/// the sorted distinct cost values, restricting to elements at or below each
/// threshold. Returns nothing when the feasible set is empty.
std::optional<BottleneckResult> solve_bottleneck(const ProblemFamily& fam,
                                                 const CostVector& costs);

/// Reference implementation: orders elements by nonincreasing cost (ties by
/// ascending id) and removes them one by one, re-solving feasibility each
/// time; the last feasible witness is optimal. Kept for cross-checking the
/// binary search.
std::optional<BottleneckResult> solve_bottleneck_linear_scan(const ProblemFamily& fam,
                                                             const CostVector& costs);

}  // namespace owabp
