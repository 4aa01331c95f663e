#include "owabp/det_solver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace owabp {

namespace {

void check_costs(const ProblemFamily& fam, const CostVector& costs) {
  if (static_cast<int>(costs.size()) != fam.num_elements())
    throw std::invalid_argument("cost vector length does not match element count");
  for (Cost c : costs)
    if (c < 0) throw std::invalid_argument("costs must be nonnegative");
}

Cost max_cost(const Solution& x, const CostVector& costs) {
  Cost best = 0;
  for (ElementId e : x.elements()) best = std::max(best, costs[e]);
  return best;
}

}  // namespace

std::optional<BottleneckResult> solve_bottleneck(const ProblemFamily& fam,
                                                 const CostVector& costs) {
  check_costs(fam, costs);
  CostVector thresholds = costs;
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

  long long calls = 0;
  const auto feasible_at = [&](Cost t) {
    RestrictedSet allowed = RestrictedSet::none(fam.num_elements());
    for (int e = 0; e < fam.num_elements(); ++e) allowed.allowed[e] = costs[e] <= t;
    ++calls;
    return find_feasible(fam, allowed);
  };

  auto witness = feasible_at(thresholds.back());
  if (!witness) return std::nullopt;
  int lo = 0;
  int hi = static_cast<int>(thresholds.size()) - 1;
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (auto x = feasible_at(thresholds[mid])) {
      witness = std::move(x);
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  const Cost value = max_cost(*witness, costs);
  return BottleneckResult{std::move(*witness), value, calls};
}

std::optional<BottleneckResult> solve_bottleneck_linear_scan(const ProblemFamily& fam,
                                                             const CostVector& costs) {
  check_costs(fam, costs);
  std::vector<ElementId> order(fam.num_elements());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](ElementId a, ElementId b) {
    return costs[a] != costs[b] ? costs[a] > costs[b] : a < b;
  });

  long long calls = 0;
  RestrictedSet allowed = RestrictedSet::all(fam.num_elements());
  ++calls;
  auto best = find_feasible(fam, allowed);
  if (!best) return std::nullopt;
  for (ElementId e : order) {
    allowed.allowed[e] = 0;
    ++calls;
    auto next = find_feasible(fam, allowed);
    if (!next) break;
    best = std::move(next);
  }
  const Cost value = max_cost(*best, costs);
  return BottleneckResult{std::move(*best), value, calls};
}

}  // namespace owabp
