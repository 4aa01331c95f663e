#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "owabp/errors.hpp"
#include "owabp/generators.hpp"
#include "owabp/oracle.hpp"
#include "test_util.hpp"

using namespace owabp;

namespace {

// apply a permutation of element ids: slot new_of[e] holds what e held before
Instance relabel(const Instance& inst, const std::vector<int>& new_of) {
  const int n = inst.family.num_elements();
  std::vector<int> old_of(n);
  for (int e = 0; e < n; ++e) old_of[new_of[e]] = e;

  ProblemFamily fam = [&] {
    switch (inst.family.kind()) {
      case FamilyKind::selection:
        return inst.family;  // ids are interchangeable
      case FamilyKind::path:
      case FamilyKind::st_cut: {
        std::vector<Arc> arcs(n);
        for (int e = 0; e < n; ++e) arcs[new_of[e]] = inst.family.arcs()[e];
        return inst.family.kind() == FamilyKind::path
                   ? ProblemFamily::path(inst.family.num_nodes(), inst.family.source(),
                                         inst.family.sink(), std::move(arcs))
                   : ProblemFamily::st_cut(inst.family.num_nodes(), inst.family.source(),
                                           inst.family.sink(), std::move(arcs));
      }
      case FamilyKind::spanning_tree: {
        std::vector<Edge> edges(n);
        for (int e = 0; e < n; ++e) edges[new_of[e]] = inst.family.edges()[e];
        return ProblemFamily::spanning_tree(inst.family.num_nodes(), std::move(edges));
      }
      case FamilyKind::assignment: {
        std::vector<BipartiteEdge> edges(n);
        for (int e = 0; e < n; ++e) edges[new_of[e]] = inst.family.bipartite_edges()[e];
        return ProblemFamily::assignment(inst.family.side(), std::move(edges));
      }
    }
    throw std::logic_error("unknown family kind");
  }();

  std::vector<CostVector> rows;
  for (int j = 0; j < inst.scenarios.num_scenarios(); ++j) {
    CostVector row(n);
    for (int e = 0; e < n; ++e) row[new_of[e]] = inst.scenarios.cost(j, e);
    rows.push_back(std::move(row));
  }
  return Instance{std::move(fam), ScenarioMatrix(std::move(rows)), inst.weights, {}};
}

}  // namespace

TEST_CASE("trivial feasible sets") {
  // |Phi| = 1: the only solution is everything
  const ProblemFamily whole = ProblemFamily::selection(3, 3);
  const ScenarioMatrix m({{4, 1, 2}});
  const SolveReport report = brute_force_owa(whole, m, WeightVector({Rational(1)}));
  CHECK(report.solution.elements() == std::vector<ElementId>{0, 1, 2});
  CHECK(report.value == Rational(4));

  const auto pick_one = brute_force_bottleneck(ProblemFamily::selection(3, 1), {4, 1, 2});
  REQUIRE(pick_one);
  CHECK(pick_one->value == 1);
}

TEST_CASE("errors") {
  const ProblemFamily infeasible = ProblemFamily::path(3, 0, 2, {Arc{0, 1}, Arc{1, 0}});
  const ScenarioMatrix m({{1, 1}});
  CHECK_THROWS_AS(brute_force_owa(infeasible, m, WeightVector({Rational(1)})), InfeasibleError);
  CHECK(!brute_force_bottleneck(infeasible, {1, 1}));
  CHECK_THROWS_AS(brute_force_owa(ProblemFamily::selection(8, 4), ScenarioMatrix({CostVector(8, 0)}),
                                  WeightVector({Rational(1)}), 10),
                  BudgetExceededError);
}

TEST_CASE("value is invariant under element relabeling") {
  SplitMix64 rng(161803);
  for (int round = 0; round < 8; ++round) {
    for (FamilyKind kind : testutil::kAllKinds) {
      const Instance inst = testutil::random_corpus_instance(kind, rng.next());
      const int n = inst.family.num_elements();
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      for (int e = n - 1; e > 0; --e)
        std::swap(perm[e], perm[rng.below(static_cast<std::uint64_t>(e) + 1)]);
      const Instance shuffled = relabel(inst, perm);
      const WeightVector w = testutil::random_weights(rng, inst.scenarios.num_scenarios());
      CHECK(brute_force_owa(inst.family, inst.scenarios, w).value ==
            brute_force_owa(shuffled.family, shuffled.scenarios, w).value);
    }
  }
}

TEST_CASE("every enumerated solution respects the OWA bounds") {
  SplitMix64 rng(577215);
  const Instance inst = testutil::random_corpus_instance(FamilyKind::spanning_tree, rng.next());
  const WeightVector w = testutil::random_weights(rng, inst.scenarios.num_scenarios());
  for (const Solution& x : enumerate_all(inst.family)) {
    const CostVector profile = scenario_profile(x, inst.scenarios);
    const OwaValue value = owa(x, inst.scenarios, w);
    CHECK(Rational(*std::min_element(profile.begin(), profile.end())) <= value);
    CHECK(value <= Rational(*std::max_element(profile.begin(), profile.end())));
  }
}
