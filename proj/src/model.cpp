#include "owabp/model.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace owabp {

ScenarioMatrix::ScenarioMatrix(std::vector<CostVector> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw std::invalid_argument("scenario matrix needs at least one scenario");
  num_elements_ = static_cast<int>(rows_[0].size());
  if (num_elements_ == 0) throw std::invalid_argument("scenario matrix needs at least one element");
  for (const auto& row : rows_) {
    if (static_cast<int>(row.size()) != num_elements_)
      throw std::invalid_argument("scenario rows have inconsistent lengths");
    for (Cost c : row)
      if (c < 0) throw std::invalid_argument("scenario costs must be nonnegative");
  }
}

WeightVector::WeightVector(std::vector<Rational> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw std::invalid_argument("weight vector must be nonempty");
  Rational sum;
  for (const Rational& w : weights_) {
    if (w < Rational(0) || w > Rational(1))
      throw std::invalid_argument("weights must lie in [0, 1], got " + w.str());
    sum += w;
  }
  if (sum != Rational(1))
    throw std::invalid_argument("weights must sum to exactly 1, got " + sum.str());
}

int WeightVector::first_positive() const {
  for (int j = 0; j < size(); ++j)
    if (!weights_[j].is_zero()) return j;
  throw std::logic_error("weight vector with no positive entry");  // sum is 1
}

Solution::Solution(std::vector<ElementId> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw std::invalid_argument("empty solution");
  std::sort(elements_.begin(), elements_.end());
  if (elements_.front() < 0) throw std::invalid_argument("negative element id in solution");
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
    throw std::invalid_argument("duplicate element id in solution");
}

bool Solution::contains(ElementId e) const {
  return std::binary_search(elements_.begin(), elements_.end(), e);
}

WeightVector WeightScheme::expand(int num_scenarios) const {
  if (num_scenarios < 1) throw std::invalid_argument("scenario count must be positive");
  const int K = num_scenarios;
  std::vector<Rational> w(K, Rational(0));
  switch (kind) {
    case PresetKind::max:
      w[0] = 1;
      break;
    case PresetKind::min:
      w[K - 1] = 1;
      break;
    case PresetKind::average:
      for (auto& wj : w) wj = Rational(1, K);
      break;
    case PresetKind::quantile:
      if (k < 1 || k > K)
        throw std::invalid_argument("quantile position " + std::to_string(k) +
                                    " out of range [1, " + std::to_string(K) + "]");
      w[k - 1] = 1;
      break;
    case PresetKind::median:
      w[K / 2] = 1;  // position floor(K/2)+1, 1-based
      break;
    case PresetKind::hurwicz:
      if (alpha < Rational(0) || alpha > Rational(1))
        throw std::invalid_argument("hurwicz alpha must lie in [0, 1], got " + alpha.str());
      w[0] += alpha;
      w[K - 1] += Rational(1) - alpha;
      break;
    case PresetKind::explicit_list:
      if (static_cast<int>(weights.size()) != K)
        throw std::invalid_argument("explicit weight list has length " +
                                    std::to_string(weights.size()) + ", expected " +
                                    std::to_string(K));
      w = weights;
      break;
  }
  return WeightVector(std::move(w));
}

std::string preset_kind_name(PresetKind kind) {
  switch (kind) {
    case PresetKind::max: return "max";
    case PresetKind::min: return "min";
    case PresetKind::average: return "average";
    case PresetKind::quantile: return "quantile";
    case PresetKind::median: return "median";
    case PresetKind::hurwicz: return "hurwicz";
    case PresetKind::explicit_list: return "explicit";
  }
  throw std::logic_error("unknown preset kind");
}

Cost bottleneck_cost(const Solution& x, int scenario, const ScenarioMatrix& m) {
  if (scenario < 0 || scenario >= m.num_scenarios())
    throw std::invalid_argument("scenario index out of range");
  Cost best = 0;
  bool first = true;
  for (ElementId e : x.elements()) {
    if (e >= m.num_elements())
      throw std::invalid_argument("solution references element beyond matrix width");
    const Cost c = m.cost(scenario, e);
    if (first || c > best) best = c;
    first = false;
  }
  return best;
}

CostVector scenario_profile(const Solution& x, const ScenarioMatrix& m) {
  CostVector profile(m.num_scenarios());
  for (int j = 0; j < m.num_scenarios(); ++j) profile[j] = bottleneck_cost(x, j, m);
  return profile;
}

OwaValue owa_of_cost_vector(const CostVector& costs, const WeightVector& w) {
  if (static_cast<int>(costs.size()) != w.size())
    throw std::invalid_argument("cost vector length does not match weight count");
  std::vector<int> order(costs.size());
  std::iota(order.begin(), order.end(), 0);
  // nonincreasing by cost, ties by original scenario index ascending
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return costs[a] > costs[b]; });
  OwaValue value;
  for (int j = 0; j < w.size(); ++j) value += w[j] * Rational(costs[order[j]]);
  return value;
}

OwaValue owa(const Solution& x, const ScenarioMatrix& m, const WeightVector& w) {
  if (w.size() != m.num_scenarios())
    throw std::invalid_argument("weight count does not match scenario count");
  return owa_of_cost_vector(scenario_profile(x, m), w);
}

CostVector worst_case_costs(const ScenarioMatrix& m) {
  CostVector worst(m.num_elements(), 0);
  for (int j = 0; j < m.num_scenarios(); ++j)
    for (int i = 0; i < m.num_elements(); ++i)
      worst[i] = std::max(worst[i], m.cost(j, i));
  return worst;
}

}  // namespace owabp
