#pragma once

#include <stdexcept>
#include <string>

namespace owabp {

/// The feasible set is empty for the given family.
struct InfeasibleError : std::runtime_error {
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration grew past its budget. `count` carries the number of
/// candidates or solutions the search would have to process.
struct BudgetExceededError : std::runtime_error {
  BudgetExceededError(const std::string& what, long long count)
      : std::runtime_error(what), count(count) {}
  long long count;
};

/// Malformed instance, report, or formula text.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace owabp
