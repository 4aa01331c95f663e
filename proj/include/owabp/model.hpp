#pragma once

#include <string>
#include <vector>

#include "owabp/rational.hpp"

namespace owabp {

using ElementId = int;
using Cost = long long;
using CostVector = std::vector<Cost>;
using OwaValue = Rational;

/// K scenarios of n nonnegative element costs. Row j is the cost vector of
/// scenario j; entry (j, i) is the cost of element i under that scenario.
/// Rows need not be pairwise distinct.
class ScenarioMatrix {
 public:
  explicit ScenarioMatrix(std::vector<CostVector> rows);

  int num_elements() const { return num_elements_; }
  int num_scenarios() const { return static_cast<int>(rows_.size()); }
  Cost cost(int scenario, ElementId element) const { return rows_[scenario][element]; }
  const CostVector& row(int scenario) const { return rows_[scenario]; }
  const std::vector<CostVector>& rows() const { return rows_; }

  friend bool operator==(const ScenarioMatrix& a, const ScenarioMatrix& b) {
    return a.rows_ == b.rows_;
  }

 private:
  std::vector<CostVector> rows_;
  int num_elements_;
};

/// Rank weights w_1..w_K: each in [0,1], summing to exactly 1. Weight j
/// multiplies the j-th largest per-scenario bottleneck cost.
class WeightVector {
 public:
  explicit WeightVector(std::vector<Rational> weights);

  int size() const { return static_cast<int>(weights_.size()); }
  const Rational& operator[](int j) const { return weights_[j]; }
  const std::vector<Rational>& values() const { return weights_; }

  /// 0-based index of the first strictly positive weight. Always exists.
  int first_positive() const;

  friend bool operator==(const WeightVector& a, const WeightVector& b) {
    return a.weights_ == b.weights_;
  }

 private:
  std::vector<Rational> weights_;
};

/// A feasible solution: a nonempty set of element ids, kept sorted ascending.
class Solution {
 public:
  explicit Solution(std::vector<ElementId> elements);

  const std::vector<ElementId>& elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }
  bool contains(ElementId e) const;

  friend bool operator==(const Solution& a, const Solution& b) {
    return a.elements_ == b.elements_;
  }
  friend bool operator<(const Solution& a, const Solution& b) {
    return a.elements_ < b.elements_;
  }

 private:
  std::vector<ElementId> elements_;
};

enum class PresetKind {
  max,
  min,
  average,
  quantile,
  median,
  hurwicz,
  explicit_list,
};

/// A weight distribution given either as a named preset (with parameters) or
/// as an explicit list; expands to a WeightVector for a given scenario count.
struct WeightScheme {
  PresetKind kind = PresetKind::average;
  Rational alpha;                  // hurwicz only
  int k = 0;                       // quantile only, 1-based
  std::vector<Rational> weights;   // explicit_list only

  static WeightScheme max() { return {PresetKind::max, {}, 0, {}}; }
  static WeightScheme min() { return {PresetKind::min, {}, 0, {}}; }
  static WeightScheme average() { return {PresetKind::average, {}, 0, {}}; }
  static WeightScheme quantile(int k) { return {PresetKind::quantile, {}, k, {}}; }
  static WeightScheme median() { return {PresetKind::median, {}, 0, {}}; }
  static WeightScheme hurwicz(Rational alpha) {
    return {PresetKind::hurwicz, alpha, 0, {}};
  }
  static WeightScheme explicit_list(std::vector<Rational> w) {
    return {PresetKind::explicit_list, {}, 0, std::move(w)};
  }

  WeightVector expand(int num_scenarios) const;
};

std::string preset_kind_name(PresetKind kind);

/// F(X, c_j) = max over elements of X of their cost under scenario j.
Cost bottleneck_cost(const Solution& x, int scenario, const ScenarioMatrix& m);

/// (F(X, c_1), ..., F(X, c_K)) in scenario order.
CostVector scenario_profile(const Solution& x, const ScenarioMatrix& m);

/// Sorts `costs` nonincreasing (ties by original index ascending) and returns
/// the weighted sum against `w` in rank order.
OwaValue owa_of_cost_vector(const CostVector& costs, const WeightVector& w);

OwaValue owa(const Solution& x, const ScenarioMatrix& m, const WeightVector& w);

/// Per-element worst case over scenarios: entry i is max_j cost(j, i).
CostVector worst_case_costs(const ScenarioMatrix& m);

}  // namespace owabp
