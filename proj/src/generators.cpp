#include "owabp/generators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "owabp/errors.hpp"
#include "owabp/feasibility.hpp"
#include "owabp/rng.hpp"

namespace owabp {

void validate_instance(const Instance& instance) {
  if (instance.scenarios.num_elements() != instance.family.num_elements())
    throw std::invalid_argument("scenario matrix width does not match element count");
  instance.weight_vector();  // throws if the scheme cannot expand
}

void CnfFormula::validate() const {
  if (num_vars < 1) throw std::invalid_argument("formula needs at least one variable");
  if (clauses.empty()) throw std::invalid_argument("formula needs at least one clause");
  for (const auto& clause : clauses) {
    if (clause.empty()) throw std::invalid_argument("empty clause");
    if (clause.size() > 3) throw std::invalid_argument("clause with more than three literals");
    for (int literal : clause) {
      const int var = std::abs(literal);
      if (literal == 0 || var > num_vars)
        throw std::invalid_argument("literal out of range: " + std::to_string(literal));
    }
  }
}

CnfFormula parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  CnfFormula formula;
  bool header_seen = false;
  int expected_clauses = 0;
  std::vector<int> current;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream fields(line);
    if (line[0] == 'p') {
      std::string p, fmt;
      if (!(fields >> p >> fmt >> formula.num_vars >> expected_clauses) || fmt != "cnf")
        throw ParseError("malformed DIMACS header: \"" + line + "\"");
      header_seen = true;
      continue;
    }
    if (!header_seen) throw ParseError("DIMACS clause before header");
    int literal;
    while (fields >> literal) {
      if (literal == 0) {
        formula.clauses.push_back(current);
        current.clear();
      } else {
        current.push_back(literal);
      }
    }
    if (!fields.eof()) throw ParseError("non-integer token in DIMACS clause: \"" + line + "\"");
  }
  if (!header_seen) throw ParseError("missing DIMACS header");
  if (!current.empty()) throw ParseError("unterminated DIMACS clause");
  if (formula.num_clauses() != expected_clauses)
    throw ParseError("DIMACS header announces " + std::to_string(expected_clauses) +
                     " clauses, found " + std::to_string(formula.num_clauses()));
  try {
    formula.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid formula: ") + e.what());
  }
  return formula;
}

int count_satisfied(const CnfFormula& formula, std::uint64_t assignment_bits) {
  int satisfied = 0;
  for (const auto& clause : formula.clauses) {
    for (int literal : clause) {
      const bool value = (assignment_bits >> (std::abs(literal) - 1)) & 1;
      if ((literal > 0) == value) {
        ++satisfied;
        break;
      }
    }
  }
  return satisfied;
}

int min_satisfied_clauses(const CnfFormula& formula) {
  formula.validate();
  if (formula.num_vars > 25)
    throw std::invalid_argument("truth-table enumeration limited to 25 variables");
  int best = formula.num_clauses();
  for (std::uint64_t bits = 0; bits < (1ULL << formula.num_vars); ++bits)
    best = std::min(best, count_satisfied(formula, bits));
  return best;
}

Instance gen_table1(int num_scenarios) {
  const int K = num_scenarios;
  if (K < 2) throw std::invalid_argument("table1 instance needs at least two scenarios");
  const int n = 2 * K;
  std::vector<CostVector> rows(K, CostVector(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < K; ++j)
      if ((i < K && j == K - 1) || i == K + j) rows[j][i] = K;
  Instance instance{ProblemFamily::selection(n, K), ScenarioMatrix(std::move(rows)),
                    WeightScheme::average(),
                    InstanceMetadata{"table1-k" + std::to_string(K), std::nullopt,
                                     "gen_table1 K=" + std::to_string(K)}};
  validate_instance(instance);
  return instance;
}

namespace {

// chain of parallel arc pairs: node i to node i+1 via arc i (positive
// literal) or arc num_vars+i (negated literal)
ProblemFamily literal_chain(int num_vars) {
  std::vector<Arc> arcs(2 * num_vars);
  for (int i = 0; i < num_vars; ++i) {
    arcs[i] = Arc{i, i + 1};
    arcs[num_vars + i] = Arc{i, i + 1};
  }
  return ProblemFamily::path(num_vars + 1, 0, num_vars, std::move(arcs));
}

}  // namespace

Instance gen_3sat_path(const CnfFormula& formula, SatMode mode, std::optional<int> target) {
  formula.validate();
  const int n = formula.num_vars;
  const int m = formula.num_clauses();

  std::vector<CostVector> rows;
  for (const auto& clause : formula.clauses) {
    CostVector row(2 * n, 0);
    for (int literal : clause) {
      const int var = std::abs(literal) - 1;
      row[literal > 0 ? var : n + var] = 1;
    }
    rows.push_back(std::move(row));
  }

  WeightScheme weights = WeightScheme::average();
  std::string mode_name = "average";
  if (mode == SatMode::median) {
    mode_name = "median";
    if (!target) throw std::invalid_argument("median mode needs a target clause count");
    const int L = *target;
    if (L < 0 || L > m) throw std::invalid_argument("target clause count out of range [0, m]");
    if (L == m / 2)
      throw std::invalid_argument("unsupported boundary case: target equals floor(m/2)");
    if (L < m / 2) {
      rows.insert(rows.end(), m - 2 * L, CostVector(2 * n, 1));  // K = 2m-2L, median at m-L+1
    } else {
      rows.insert(rows.end(), 2 * L - m, CostVector(2 * n, 0));  // K = 2L, median at L+1
    }
    weights = WeightScheme::median();
  } else if (mode == SatMode::nondecreasing) {
    mode_name = "nondecreasing";
    if (!target) throw std::invalid_argument("nondecreasing mode needs a target clause count");
    const int L = *target;
    if (L < 0 || L >= m)
      throw std::invalid_argument("target clause count out of range [0, m-1]");
    std::vector<Rational> w(m, Rational(0));
    for (int j = L; j < m; ++j) w[j] = Rational(1, m - L);
    weights = WeightScheme::explicit_list(std::move(w));
  }

  std::string name = "3sat-" + mode_name + "-n" + std::to_string(n) + "-m" + std::to_string(m);
  if (target) name += "-l" + std::to_string(*target);
  Instance instance{literal_chain(n), ScenarioMatrix(std::move(rows)), std::move(weights),
                    InstanceMetadata{name, std::nullopt, "gen_3sat_path mode=" + mode_name}};
  validate_instance(instance);
  return instance;
}

namespace {

int derived_node_count(const RandomInstanceSpec& spec) {
  if (spec.num_nodes > 0) return spec.num_nodes;
  return std::clamp(2 + spec.num_elements / 2, 2, spec.num_elements + 1);
}

std::pair<int, int> random_distinct_pair(SplitMix64& rng, int bound) {
  const int a = static_cast<int>(rng.below(bound));
  int b = static_cast<int>(rng.below(bound));
  while (b == a) b = static_cast<int>(rng.below(bound));
  return {a, b};
}

ProblemFamily random_structure(const RandomInstanceSpec& spec, SplitMix64& rng) {
  const int n = spec.num_elements;
  switch (spec.kind) {
    case FamilyKind::selection: {
      const int p = spec.selection_size > 0 ? spec.selection_size : std::max(1, n / 2);
      return ProblemFamily::selection(n, p);
    }
    case FamilyKind::path:
    case FamilyKind::st_cut: {
      const int nodes = derived_node_count(spec);
      if (nodes < 2 || nodes - 1 > n)
        throw std::invalid_argument("node count incompatible with element count");
      std::vector<Arc> arcs;
      for (int v = 0; v + 1 < nodes; ++v) arcs.push_back(Arc{v, v + 1});  // backbone
      while (static_cast<int>(arcs.size()) < n) {
        auto [a, b] = random_distinct_pair(rng, nodes);
        arcs.push_back(Arc{a, b});
      }
      return spec.kind == FamilyKind::path
                 ? ProblemFamily::path(nodes, 0, nodes - 1, std::move(arcs))
                 : ProblemFamily::st_cut(nodes, 0, nodes - 1, std::move(arcs));
    }
    case FamilyKind::spanning_tree: {
      const int nodes = derived_node_count(spec);
      if (nodes < 2 || nodes - 1 > n)
        throw std::invalid_argument("node count incompatible with element count");
      std::vector<Edge> edges;
      for (int v = 1; v < nodes; ++v)  // random recursive tree backbone
        edges.push_back(Edge{static_cast<int>(rng.below(v)), v});
      while (static_cast<int>(edges.size()) < n) {
        auto [a, b] = random_distinct_pair(rng, nodes);
        edges.push_back(Edge{a, b});
      }
      return ProblemFamily::spanning_tree(nodes, std::move(edges));
    }
    case FamilyKind::assignment: {
      const int side = spec.num_nodes > 0
                           ? spec.num_nodes
                           : std::max(2, static_cast<int>(std::sqrt(static_cast<double>(n))));
      if (side > n) throw std::invalid_argument("side count incompatible with element count");
      std::vector<BipartiteEdge> edges;
      for (int v = 0; v < side; ++v) edges.push_back(BipartiteEdge{v, v});  // backbone matching
      while (static_cast<int>(edges.size()) < n)
        edges.push_back(BipartiteEdge{static_cast<int>(rng.below(side)),
                                      static_cast<int>(rng.below(side))});
      return ProblemFamily::assignment(side, std::move(edges));
    }
  }
  throw std::logic_error("unknown family kind");
}

}  // namespace

Instance gen_random(const RandomInstanceSpec& spec) {
  if (spec.num_elements < 1) throw std::invalid_argument("element count must be positive");
  if (spec.num_scenarios < 1) throw std::invalid_argument("scenario count must be positive");
  if (spec.cost_max < 0) throw std::invalid_argument("cost bound must be nonnegative");
  if (spec.cost_max > 1'000'000'000'000LL)
    throw std::invalid_argument("cost bound exceeds the file format limit of 10^12");

  SplitMix64 rng(spec.seed);
  ProblemFamily family = random_structure(spec, rng);
  std::vector<CostVector> rows(spec.num_scenarios, CostVector(spec.num_elements));
  for (auto& row : rows)
    for (Cost& c : row) c = static_cast<Cost>(rng.below(static_cast<std::uint64_t>(spec.cost_max) + 1));

  std::string name = "random-" + family_kind_name(spec.kind) + "-n" +
                     std::to_string(spec.num_elements) + "-k" +
                     std::to_string(spec.num_scenarios) + "-seed" + std::to_string(spec.seed);
  Instance instance{std::move(family), ScenarioMatrix(std::move(rows)), spec.weights,
                    InstanceMetadata{name, spec.seed, "gen_random"}};
  validate_instance(instance);
  if (!find_feasible(instance.family, RestrictedSet::all(spec.num_elements)))
    throw std::logic_error("random structure lost its feasibility guarantee");
  return instance;
}

}  // namespace owabp
