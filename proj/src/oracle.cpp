#include "owabp/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "owabp/errors.hpp"

namespace owabp {

SolveReport brute_force_owa(const ProblemFamily& fam, const ScenarioMatrix& m,
                            const WeightVector& w, long long budget) {
  const auto start = std::chrono::steady_clock::now();
  if (m.num_elements() != fam.num_elements())
    throw std::invalid_argument("scenario matrix width does not match element count");
  if (w.size() != m.num_scenarios())
    throw std::invalid_argument("weight count does not match scenario count");

  const std::vector<Solution> members = enumerate_all(fam, budget);
  if (members.empty()) throw InfeasibleError("brute force: feasible set is empty");

  const Solution* best = nullptr;
  OwaValue best_value;
  for (const Solution& x : members) {  // lexicographic order, first win breaks ties
    OwaValue value = owa(x, m, w);
    if (!best || value < best_value) {
      best = &x;
      best_value = value;
    }
  }
  CostVector profile = scenario_profile(*best, m);
  return SolveReport{*best,
                     best_value,
                     "brute-force",
                     std::nullopt,
                     std::move(profile),
                     0,
                     std::chrono::duration_cast<std::chrono::microseconds>(
                         std::chrono::steady_clock::now() - start)};
}

std::optional<BottleneckResult> brute_force_bottleneck(const ProblemFamily& fam,
                                                       const CostVector& costs,
                                                       long long budget) {
  if (static_cast<int>(costs.size()) != fam.num_elements())
    throw std::invalid_argument("cost vector length does not match element count");
  const std::vector<Solution> members = enumerate_all(fam, budget);
  if (members.empty()) return std::nullopt;

  const Solution* best = nullptr;
  Cost best_value = 0;
  for (const Solution& x : members) {
    Cost value = 0;
    for (ElementId e : x.elements()) value = std::max(value, costs[e]);
    if (!best || value < best_value) {
      best = &x;
      best_value = value;
    }
  }
  return BottleneckResult{*best, best_value, 0};
}

}  // namespace owabp
