#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "owabp/det_solver.hpp"
#include "owabp/feasibility.hpp"

namespace owabp {

/// Guards the threshold-vector enumeration of the exact solver, whose size
/// grows like n^K.
struct EnumerationBudget {
  long long max_candidates = 10'000'000;
};

struct SolveReport {
  Solution solution;
  OwaValue value;  // OWA of `solution` under the algorithm's effective weights
  std::string algorithm;
  std::optional<Rational> certified_ratio;  // approximation guarantee, approx only
  CostVector per_scenario_costs;            // F(solution, c_j) in scenario order
  long long oracle_calls = 0;               // feasibility queries issued
  std::chrono::microseconds elapsed{0};
};

/// Minimizes the largest per-scenario bottleneck cost: one deterministic
/// solve under the per-element worst-case costs.
SolveReport solve_minmax(const ProblemFamily& fam, const ScenarioMatrix& m);

/// Minimizes the smallest per-scenario bottleneck cost: one deterministic
/// solve per scenario, keeping the best.
SolveReport solve_minmin(const ProblemFamily& fam, const ScenarioMatrix& m);

/// Exact OWA minimization for arbitrary weights. Enumerates threshold
/// vectors drawn from the distinct cost values of each scenario row,
/// restricts to elements within every threshold, and keeps the feasible
/// candidate whose rank-weighted threshold sum is smallest. Throws
/// BudgetExceededError (naming the candidate count) before enumerating if
/// the product of distinct row values exceeds the budget.
SolveReport solve_exact(const ProblemFamily& fam, const ScenarioMatrix& m,
                        const WeightVector& w, const EnumerationBudget& budget = {});

/// Hurwicz criterion alpha*worst + (1-alpha)*best via one two-scenario exact
/// solve per scenario.
SolveReport solve_hurwicz(const ProblemFamily& fam, const ScenarioMatrix& m,
                          const Rational& alpha, const EnumerationBudget& budget = {});

/// Minimizes the k-th largest per-scenario bottleneck cost (1-based k) by
/// solving min-max over every scenario subset that drops k-1 rows.
SolveReport solve_quantile(const ProblemFamily& fam, const ScenarioMatrix& m, int k);

/// Quantile at position floor(K/2)+1.
SolveReport solve_median(const ProblemFamily& fam, const ScenarioMatrix& m);

/// 1/w_k-approximation: solves the quantile problem at the first positive
/// weight position k and certifies the ratio 1/w_k. The reported value is
/// the true OWA of the returned solution under `w`.
SolveReport solve_approx(const ProblemFamily& fam, const ScenarioMatrix& m,
                         const WeightVector& w);

}  // namespace owabp
