#include "owabp/solvers.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>

#include "owabp/errors.hpp"

namespace owabp {

namespace {

using Clock = std::chrono::steady_clock;

std::chrono::microseconds since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
}

void check_dimensions(const ProblemFamily& fam, const ScenarioMatrix& m) {
  if (m.num_elements() != fam.num_elements())
    throw std::invalid_argument("scenario matrix width does not match element count");
}

SolveReport finish(std::string algorithm, const ScenarioMatrix& m, const WeightVector& w,
                   Solution solution, std::optional<Rational> ratio, long long calls,
                   Clock::time_point start) {
  CostVector profile = scenario_profile(solution, m);
  OwaValue value = owa_of_cost_vector(profile, w);
  return SolveReport{std::move(solution), std::move(value),   std::move(algorithm),
                     std::move(ratio),    std::move(profile), calls,
                     since(start)};
}

}  // namespace

SolveReport solve_minmax(const ProblemFamily& fam, const ScenarioMatrix& m) {
  const auto start = Clock::now();
  check_dimensions(fam, m);
  auto det = solve_bottleneck(fam, worst_case_costs(m));
  if (!det) throw InfeasibleError("min-max: feasible set is empty");
  return finish("minmax", m, WeightScheme::max().expand(m.num_scenarios()),
                std::move(det->solution), std::nullopt, det->oracle_calls, start);
}

SolveReport solve_minmin(const ProblemFamily& fam, const ScenarioMatrix& m) {
  const auto start = Clock::now();
  check_dimensions(fam, m);
  long long calls = 0;
  std::optional<BottleneckResult> best;
  for (int j = 0; j < m.num_scenarios(); ++j) {
    auto det = solve_bottleneck(fam, m.row(j));
    if (!det) throw InfeasibleError("min-min: feasible set is empty");
    calls += det->oracle_calls;
    if (!best || det->value < best->value) best = std::move(det);
  }
  return finish("minmin", m, WeightScheme::min().expand(m.num_scenarios()),
                std::move(best->solution), std::nullopt, calls, start);
}

namespace {

// Rank-weighted sum of a threshold vector: sort nonincreasing, dot with w.
// Kept allocation-free; it runs once per enumerated candidate.
OwaValue owa_of_thresholds(const CostVector& thresholds, const WeightVector& w,
                           CostVector& scratch) {
  scratch = thresholds;
  std::sort(scratch.begin(), scratch.end(), std::greater<Cost>());
  OwaValue value;
  for (int j = 0; j < w.size(); ++j) value += w[j] * Rational(scratch[j]);
  return value;
}

}  // namespace

SolveReport solve_exact(const ProblemFamily& fam, const ScenarioMatrix& m,
                        const WeightVector& w, const EnumerationBudget& budget) {
  const auto start = Clock::now();
  check_dimensions(fam, m);
  if (w.size() != m.num_scenarios())
    throw std::invalid_argument("weight count does not match scenario count");
  if (budget.max_candidates <= 0) throw std::invalid_argument("candidate budget must be positive");

  const int K = m.num_scenarios();
  const int n = m.num_elements();

  std::vector<CostVector> distinct(K);
  for (int j = 0; j < K; ++j) {
    distinct[j] = m.row(j);
    std::sort(distinct[j].begin(), distinct[j].end());
    distinct[j].erase(std::unique(distinct[j].begin(), distinct[j].end()), distinct[j].end());
  }

  unsigned __int128 candidates = 1;
  for (int j = 0; j < K; ++j) candidates *= distinct[j].size();
  if (candidates > static_cast<unsigned __int128>(budget.max_candidates)) {
    const long long shown =
        candidates > static_cast<unsigned __int128>(std::numeric_limits<long long>::max())
            ? std::numeric_limits<long long>::max()
            : static_cast<long long>(candidates);
    throw BudgetExceededError("exact enumeration needs " + std::to_string(shown) +
                                  " threshold vectors, budget is " +
                                  std::to_string(budget.max_candidates),
                              shown);
  }

  long long calls = 0;
  std::optional<OwaValue> best_value;
  std::optional<Solution> best_witness;

  // odometer over value indices; rightmost digit fastest = lexicographically
  // ascending threshold vectors, so first-found wins ties
  std::vector<std::size_t> idx(K, 0);
  CostVector thresholds(K), scratch(K);
  RestrictedSet allowed = RestrictedSet::none(n);
  for (int j = 0; j < K; ++j) thresholds[j] = distinct[j][0];
  while (true) {
    const OwaValue candidate_value = owa_of_thresholds(thresholds, w, scratch);
    if (!best_value || candidate_value < *best_value) {
      for (int e = 0; e < n; ++e) {
        bool within = true;
        for (int j = 0; j < K && within; ++j) within = m.cost(j, e) <= thresholds[j];
        allowed.allowed[e] = within;
      }
      ++calls;
      if (auto witness = find_feasible(fam, allowed)) {
        best_value = candidate_value;
        best_witness = std::move(witness);
      }
    }
    int j = K - 1;
    while (j >= 0 && idx[j] + 1 == distinct[j].size()) {
      idx[j] = 0;
      thresholds[j] = distinct[j][0];
      --j;
    }
    if (j < 0) break;
    ++idx[j];
    thresholds[j] = distinct[j][idx[j]];
  }

  if (!best_witness) throw InfeasibleError("exact: feasible set is empty");
  SolveReport report = finish("exact", m, w, std::move(*best_witness), std::nullopt, calls, start);
  // the rank-weighted threshold sum of the winner both bounds its OWA from
  // above and is attained by the optimum, so the recomputed value matches it
  assert(report.value == *best_value);
  return report;
}

SolveReport solve_hurwicz(const ProblemFamily& fam, const ScenarioMatrix& m,
                          const Rational& alpha, const EnumerationBudget& budget) {
  const auto start = Clock::now();
  check_dimensions(fam, m);
  if (alpha < Rational(0) || alpha > Rational(1))
    throw std::invalid_argument("hurwicz alpha must lie in [0, 1], got " + alpha.str());

  const CostVector worst = worst_case_costs(m);
  const WeightVector two_scenario_weights({alpha, Rational(1) - alpha});

  long long calls = 0;
  std::optional<OwaValue> best_value;
  std::optional<Solution> best_solution;
  for (int j = 0; j < m.num_scenarios(); ++j) {
    // worst-case row dominates row j entrywise, so this two-scenario OWA is
    // exactly alpha*worst + (1-alpha)*row_j
    SolveReport sub = solve_exact(fam, ScenarioMatrix({worst, m.row(j)}),
                                  two_scenario_weights, budget);
    calls += sub.oracle_calls;
    if (!best_value || sub.value < *best_value) {
      best_value = sub.value;
      best_solution = std::move(sub.solution);
    }
  }
  return finish("hurwicz", m, WeightScheme::hurwicz(alpha).expand(m.num_scenarios()),
                std::move(*best_solution), std::nullopt, calls, start);
}

SolveReport solve_quantile(const ProblemFamily& fam, const ScenarioMatrix& m, int k) {
  const auto start = Clock::now();
  check_dimensions(fam, m);
  const int K = m.num_scenarios();
  if (k < 1 || k > K)
    throw std::invalid_argument("quantile position " + std::to_string(k) +
                                " out of range [1, " + std::to_string(K) + "]");

  long long calls = 0;
  std::optional<Cost> best_value;
  std::optional<Solution> best_solution;

  // all scenario subsets of size k-1 to drop, in lexicographic order
  std::vector<int> drop(k - 1);
  for (int i = 0; i < k - 1; ++i) drop[i] = i;
  while (true) {
    std::vector<char> dropped(K, 0);
    for (int j : drop) dropped[j] = 1;
    std::vector<CostVector> kept;
    for (int j = 0; j < K; ++j)
      if (!dropped[j]) kept.push_back(m.row(j));
    auto det = solve_bottleneck(fam, worst_case_costs(ScenarioMatrix(std::move(kept))));
    if (!det) throw InfeasibleError("quantile: feasible set is empty");
    calls += det->oracle_calls;
    if (!best_value || det->value < *best_value) {
      best_value = det->value;
      best_solution = std::move(det->solution);
    }
    int i = k - 2;
    while (i >= 0 && drop[i] == K - (k - 1) + i) --i;
    if (i < 0) break;
    ++drop[i];
    for (int j = i + 1; j < k - 1; ++j) drop[j] = drop[j - 1] + 1;
  }
  return finish("quantile", m, WeightScheme::quantile(k).expand(K), std::move(*best_solution),
                std::nullopt, calls, start);
}

SolveReport solve_median(const ProblemFamily& fam, const ScenarioMatrix& m) {
  SolveReport report = solve_quantile(fam, m, m.num_scenarios() / 2 + 1);
  report.algorithm = "median";
  return report;
}

SolveReport solve_approx(const ProblemFamily& fam, const ScenarioMatrix& m,
                         const WeightVector& w) {
  const auto start = Clock::now();
  check_dimensions(fam, m);
  if (w.size() != m.num_scenarios())
    throw std::invalid_argument("weight count does not match scenario count");
  const int k = w.first_positive();  // 0-based
  SolveReport quantile = solve_quantile(fam, m, k + 1);
  SolveReport report = finish("approx", m, w, std::move(quantile.solution),
                              Rational(1) / w[k], quantile.oracle_calls, start);
  return report;
}

}  // namespace owabp
