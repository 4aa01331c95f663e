#pragma once

#include <optional>
#include <vector>

#include "owabp/family.hpp"

namespace owabp {

/// Elements a feasibility query may use.
struct RestrictedSet {
  std::vector<char> allowed;  // size == num_elements()

  static RestrictedSet all(int num_elements) {
    return RestrictedSet{std::vector<char>(num_elements, 1)};
  }
  static RestrictedSet none(int num_elements) {
    return RestrictedSet{std::vector<char>(num_elements, 0)};
  }
  static RestrictedSet of(int num_elements, const std::vector<ElementId>& ids);

  bool contains(ElementId e) const { return allowed[e]; }
  int size() const { return static_cast<int>(allowed.size()); }
};

/// The feasibility subproblem: return some member of the feasible set using
/// only allowed elements, or nothing when no such member exists. The witness
/// is deterministic: every family scans elements in ascending id order.
std::optional<Solution> find_feasible(const ProblemFamily& fam, const RestrictedSet& allowed);

constexpr long long kDefaultEnumerationBudget = 5000;

/// Every feasible solution exactly once, sorted lexicographically by element
/// id set. Throws BudgetExceededError once more than `budget` solutions turn
/// up.
std::vector<Solution> enumerate_all(const ProblemFamily& fam,
                                    long long budget = kDefaultEnumerationBudget);

/// Independent membership test used to cross-check the constructive oracles.
/// Accepts arbitrary id sets (unsorted, duplicated, or out of range input
/// returns false rather than throwing).
bool is_member(const ProblemFamily& fam, const std::vector<ElementId>& elements);

}  // namespace owabp
