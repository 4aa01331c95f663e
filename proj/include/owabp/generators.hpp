#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "owabp/instance.hpp"

namespace owabp {

/// CNF formula with clauses of one to three literals. Literals are signed
/// 1-based variable indices: +v is the variable, -v its negation.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;

  int num_clauses() const { return static_cast<int>(clauses.size()); }
  void validate() const;
};

/// Minimal DIMACS reader: "c" comment lines, one "p cnf VARS CLAUSES" header,
/// whitespace-separated literals with 0 terminating each clause.
CnfFormula parse_dimacs(const std::string& text);

/// Number of clauses satisfied by the assignment whose bit i gives the value
/// of variable i+1.
int count_satisfied(const CnfFormula& formula, std::uint64_t assignment_bits);

/// Minimum satisfied-clause count over all 2^num_vars assignments, by
/// exhaustive truth-table enumeration. num_vars must stay small.
int min_satisfied_clauses(const CnfFormula& formula);

/// The tight instance for the quantile approximation: 2K elements, choose K,
/// uniform weights. Every element costs K under exactly one scenario: the
/// first K elements all load the last scenario, element K+j loads scenario j.
Instance gen_table1(int num_scenarios);

enum class SatMode { average, median, nondecreasing };

/// Path instance over a chain of parallel arc pairs, one pair per variable;
/// arc i takes the positive literal of variable i+1, arc num_vars+i the
/// negated one. Scenario j charges 1 to the arcs of the literals in clause j.
///
/// average:        one scenario per clause, uniform weights.
/// median:         requires target L != floor(m/2); pads with all-one
///                 scenarios (L below the midpoint) or all-zero scenarios
///                 (L above), median weights.
/// nondecreasing:  requires target L in [0, m-1]; weights are 0 for the L
///                 largest costs, then uniform over the rest.
Instance gen_3sat_path(const CnfFormula& formula, SatMode mode,
                       std::optional<int> target = std::nullopt);

struct RandomInstanceSpec {
  FamilyKind kind = FamilyKind::selection;
  int num_elements = 8;
  int selection_size = 0;  // 0 = num_elements / 2, at least 1
  int num_nodes = 0;       // graph families; 0 = derived; per side for assignment
  int num_scenarios = 2;
  Cost cost_max = 9;
  WeightScheme weights = WeightScheme::average();
  std::uint64_t seed = 0;
};

/// Seed-reproducible random instance with a guaranteed nonempty feasible set
/// (graph families start from a connecting backbone before random extras).
Instance gen_random(const RandomInstanceSpec& spec);

}  // namespace owabp
