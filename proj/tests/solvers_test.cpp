#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <thread>

#include "owabp/errors.hpp"
#include "owabp/generators.hpp"
#include "owabp/oracle.hpp"
#include "owabp/solvers.hpp"
#include "test_util.hpp"

using namespace owabp;

namespace {

// literal form of the exact enumeration: one element per scenario instead of
// one threshold value per scenario; used to certify the distinct-value search
OwaValue exact_by_element_tuples(const ProblemFamily& fam, const ScenarioMatrix& m,
                                 const WeightVector& w) {
  const int K = m.num_scenarios();
  const int n = m.num_elements();
  std::optional<OwaValue> best;
  std::vector<int> tuple(K, 0);
  while (true) {
    CostVector profile(K);
    for (int j = 0; j < K; ++j) profile[j] = m.cost(j, tuple[j]);
    RestrictedSet allowed = RestrictedSet::none(n);
    for (int e = 0; e < n; ++e) {
      bool within = true;
      for (int j = 0; j < K && within; ++j) within = m.cost(j, e) <= profile[j];
      allowed.allowed[e] = within;
    }
    if (find_feasible(fam, allowed)) {
      const OwaValue value = owa_of_cost_vector(profile, w);
      if (!best || value < *best) best = value;
    }
    int j = K - 1;
    while (j >= 0 && tuple[j] + 1 == n) {
      tuple[j] = 0;
      --j;
    }
    if (j < 0) break;
    ++tuple[j];
  }
  REQUIRE(best);
  return *best;
}

bool reports_equal(const SolveReport& a, const SolveReport& b) {
  return a.solution == b.solution && a.value == b.value && a.algorithm == b.algorithm &&
         a.certified_ratio == b.certified_ratio &&
         a.per_scenario_costs == b.per_scenario_costs && a.oracle_calls == b.oracle_calls;
}

}  // namespace

TEST_CASE("tight example: minmax K, minmin 0, exact 1") {
  for (int k = 2; k <= 4; ++k) {
    const Instance t = gen_table1(k);
    CHECK(solve_minmax(t.family, t.scenarios).value == Rational(k));
    CHECK(solve_minmin(t.family, t.scenarios).value == Rational(0));
    const SolveReport exact = solve_exact(t.family, t.scenarios, t.weight_vector());
    CHECK(exact.value == Rational(1));
  }
  const SolveReport exact3 = solve_exact(gen_table1(3).family, gen_table1(3).scenarios,
                                         gen_table1(3).weight_vector());
  CHECK(exact3.solution.elements() == std::vector<ElementId>{0, 1, 2});
}

TEST_CASE("single scenario collapses every solver to the bottleneck solver") {
  SplitMix64 rng(111);
  for (FamilyKind kind : testutil::kAllKinds) {
    Instance inst = testutil::random_corpus_instance(kind, rng.next());
    const ScenarioMatrix m({inst.scenarios.row(0)});
    const auto det = solve_bottleneck(inst.family, m.row(0));
    REQUIRE(det);
    const Rational expected(det->value);
    CHECK(solve_minmax(inst.family, m).value == expected);
    CHECK(solve_minmin(inst.family, m).value == expected);
    CHECK(solve_exact(inst.family, m, WeightVector({Rational(1)})).value == expected);
    CHECK(solve_quantile(inst.family, m, 1).value == expected);
    CHECK(solve_median(inst.family, m).value == expected);
  }
}

TEST_CASE("minmax on a formula no assignment escapes") {
  // (x1) and (not x1): every path pays one clause
  const CnfFormula formula{1, {{1}, {-1}}};
  const Instance inst = gen_3sat_path(formula, SatMode::average);
  CHECK(solve_minmax(inst.family, inst.scenarios).value == Rational(1));
}

TEST_CASE("minmin finds an all-zero scenario") {
  const ScenarioMatrix m({{5, 6, 7}, {0, 0, 0}});
  CHECK(solve_minmin(ProblemFamily::selection(3, 2), m).value == Rational(0));
}

TEST_CASE("exact equals the literal element-tuple enumeration") {
  SplitMix64 rng(321);
  for (int round = 0; round < 25; ++round) {
    RandomInstanceSpec spec;
    spec.kind = testutil::kAllKinds[rng.below(5)];
    spec.num_elements = 4 + static_cast<int>(rng.below(2));  // keeps n^K tuples tiny
    spec.selection_size = 2;
    spec.num_scenarios = 1 + static_cast<int>(rng.below(3));
    spec.cost_max = 4;
    spec.seed = rng.next();
    const Instance inst = gen_random(spec);
    const WeightVector w = testutil::random_weights(rng, spec.num_scenarios);
    CHECK(solve_exact(inst.family, inst.scenarios, w).value ==
          exact_by_element_tuples(inst.family, inst.scenarios, w));
  }
}

TEST_CASE("exact equals brute force under sampled weights") {
  SplitMix64 rng(987);
  for (int round = 0; round < 12; ++round) {
    for (FamilyKind kind : testutil::kAllKinds) {
      const Instance inst = testutil::random_corpus_instance(kind, rng.next());
      for (int trial = 0; trial < 4; ++trial) {
        const WeightVector w = testutil::random_weights(rng, inst.scenarios.num_scenarios());
        CHECK(solve_exact(inst.family, inst.scenarios, w).value ==
              brute_force_owa(inst.family, inst.scenarios, w).value);
      }
    }
  }
}

TEST_CASE("every feasible threshold vector upper-bounds its witness") {
  SplitMix64 rng(555);
  const Instance inst = testutil::random_corpus_instance(FamilyKind::selection, rng.next());
  const ScenarioMatrix& m = inst.scenarios;
  const int K = m.num_scenarios();
  const WeightVector w = testutil::random_weights(rng, K);

  std::vector<CostVector> distinct(K);
  for (int j = 0; j < K; ++j) {
    distinct[j] = m.row(j);
    std::sort(distinct[j].begin(), distinct[j].end());
    distinct[j].erase(std::unique(distinct[j].begin(), distinct[j].end()), distinct[j].end());
  }
  std::vector<std::size_t> idx(K, 0);
  int feasible_seen = 0;
  while (true) {
    CostVector thresholds(K);
    for (int j = 0; j < K; ++j) thresholds[j] = distinct[j][idx[j]];
    RestrictedSet allowed = RestrictedSet::none(m.num_elements());
    for (int e = 0; e < m.num_elements(); ++e) {
      bool within = true;
      for (int j = 0; j < K && within; ++j) within = m.cost(j, e) <= thresholds[j];
      allowed.allowed[e] = within;
    }
    if (const auto witness = find_feasible(inst.family, allowed)) {
      ++feasible_seen;
      CHECK(owa(*witness, m, w) <= owa_of_cost_vector(thresholds, w));
    }
    int j = K - 1;
    while (j >= 0 && idx[j] + 1 == distinct[j].size()) {
      idx[j] = 0;
      --j;
    }
    if (j < 0) break;
    ++idx[j];
  }
  CHECK(feasible_seen > 0);
}

TEST_CASE("hurwicz endpoints and interior") {
  SplitMix64 rng(246);
  for (int round = 0; round < 8; ++round) {
    for (FamilyKind kind : testutil::kAllKinds) {
      const Instance inst = testutil::random_corpus_instance(kind, rng.next());
      const auto& fam = inst.family;
      const auto& m = inst.scenarios;
      CHECK(solve_hurwicz(fam, m, Rational(1)).value == solve_minmax(fam, m).value);
      CHECK(solve_hurwicz(fam, m, Rational(0)).value == solve_minmin(fam, m).value);
      const WeightVector half = WeightScheme::hurwicz(Rational(1, 2)).expand(m.num_scenarios());
      CHECK(solve_hurwicz(fam, m, Rational(1, 2)).value ==
            brute_force_owa(fam, m, half).value);
    }
  }
  CHECK_THROWS_AS(
      solve_hurwicz(ProblemFamily::selection(2, 1), ScenarioMatrix({{1, 2}}), Rational(2)),
      std::invalid_argument);
}

TEST_CASE("quantile endpoints, median delegation, and range checks") {
  SplitMix64 rng(135);
  for (int round = 0; round < 8; ++round) {
    for (FamilyKind kind : testutil::kAllKinds) {
      const Instance inst = testutil::random_corpus_instance(kind, rng.next());
      const auto& fam = inst.family;
      const auto& m = inst.scenarios;
      const int K = m.num_scenarios();
      CHECK(solve_quantile(fam, m, 1).value == solve_minmax(fam, m).value);
      CHECK(solve_quantile(fam, m, K).value == solve_minmin(fam, m).value);
      CHECK(solve_median(fam, m).value == solve_quantile(fam, m, K / 2 + 1).value);
      CHECK_THROWS_AS(solve_quantile(fam, m, 0), std::invalid_argument);
      CHECK_THROWS_AS(solve_quantile(fam, m, K + 1), std::invalid_argument);
    }
  }
}

TEST_CASE("median equals brute force at K=5") {
  SplitMix64 rng(864);
  for (FamilyKind kind : testutil::kAllKinds) {
    RandomInstanceSpec spec;
    spec.kind = kind;
    spec.num_elements = 7;
    spec.selection_size = 3;
    spec.num_scenarios = 5;
    spec.cost_max = 6;
    spec.seed = rng.next();
    const Instance inst = gen_random(spec);
    const WeightVector w = WeightScheme::median().expand(5);
    CHECK(solve_median(inst.family, inst.scenarios).value ==
          brute_force_owa(inst.family, inst.scenarios, w).value);
  }
}

TEST_CASE("specialized solvers match exact under their preset weights") {
  SplitMix64 rng(771);
  for (int round = 0; round < 6; ++round) {
    for (FamilyKind kind : testutil::kAllKinds) {
      const Instance inst = testutil::random_corpus_instance(kind, rng.next());
      const auto& fam = inst.family;
      const auto& m = inst.scenarios;
      const int K = m.num_scenarios();
      CHECK(solve_minmax(fam, m).value ==
            solve_exact(fam, m, WeightScheme::max().expand(K)).value);
      CHECK(solve_minmin(fam, m).value ==
            solve_exact(fam, m, WeightScheme::min().expand(K)).value);
      CHECK(solve_median(fam, m).value ==
            solve_exact(fam, m, WeightScheme::median().expand(K)).value);
      for (int k = 1; k <= K; ++k)
        CHECK(solve_quantile(fam, m, k).value ==
              solve_exact(fam, m, WeightScheme::quantile(k).expand(K)).value);
      CHECK(solve_hurwicz(fam, m, Rational(1, 3)).value ==
            solve_exact(fam, m, WeightScheme::hurwicz(Rational(1, 3)).expand(K)).value);
    }
  }
}

TEST_CASE("approx certifies 1/w_k and respects it") {
  SplitMix64 rng(404);
  for (int round = 0; round < 10; ++round) {
    for (FamilyKind kind : testutil::kAllKinds) {
      const Instance inst = testutil::random_corpus_instance(kind, rng.next());
      const WeightVector w = testutil::random_weights(rng, inst.scenarios.num_scenarios());
      const SolveReport approx = solve_approx(inst.family, inst.scenarios, w);
      REQUIRE(approx.certified_ratio);
      CHECK(*approx.certified_ratio == Rational(1) / w[w.first_positive()]);
      const SolveReport exact = solve_exact(inst.family, inst.scenarios, w);
      CHECK(approx.value <= *approx.certified_ratio * exact.value);
      CHECK(approx.value >= exact.value);
    }
  }
}

TEST_CASE("nonincreasing weights are approximable within 1/w_1") {
  SplitMix64 rng(808);
  for (int round = 0; round < 10; ++round) {
    for (FamilyKind kind : testutil::kAllKinds) {
      const Instance inst = testutil::random_corpus_instance(kind, rng.next());
      std::vector<Rational> raw = testutil::random_weights(rng, inst.scenarios.num_scenarios())
                                      .values();
      std::sort(raw.begin(), raw.end(), [](const Rational& a, const Rational& b) { return b < a; });
      const WeightVector w(raw);
      const SolveReport approx = solve_approx(inst.family, inst.scenarios, w);
      CHECK(*approx.certified_ratio == Rational(1) / w[0]);  // w_1 > 0 when nonincreasing
      CHECK(approx.value <=
            *approx.certified_ratio * brute_force_owa(inst.family, inst.scenarios, w).value);
    }
  }
}

TEST_CASE("approx with full mass on the first rank is exact") {
  const Instance t = gen_table1(3);
  const SolveReport approx =
      solve_approx(t.family, t.scenarios, WeightScheme::max().expand(3));
  CHECK(*approx.certified_ratio == Rational(1));
  CHECK(approx.value == solve_minmax(t.family, t.scenarios).value);
}

TEST_CASE("tightness exhibit: the adversarial minmax witness costs K times more") {
  for (int k = 2; k <= 5; ++k) {
    const Instance t = gen_table1(k);
    const WeightVector w = t.weight_vector();
    std::vector<ElementId> adversarial(k);
    std::iota(adversarial.begin(), adversarial.end(), k);
    const Solution bad(adversarial);
    // a legitimate minmax optimum (everything is), yet OWA = K = (1/w_1) * OPT
    CHECK(bottleneck_cost(bad, 0, t.scenarios) == k);
    CHECK(owa(bad, t.scenarios, w) == Rational(k));
    CHECK(brute_force_owa(t.family, t.scenarios, w).value == Rational(1));
  }
}

TEST_CASE("exact budget error names the candidate count") {
  const Instance t = gen_table1(3);  // rows have 2 distinct values each -> 8 candidates
  try {
    solve_exact(t.family, t.scenarios, t.weight_vector(), EnumerationBudget{7});
    FAIL("budget should have been exceeded");
  } catch (const BudgetExceededError& e) {
    CHECK(e.count == 8);
    CHECK(std::string(e.what()).find("8") != std::string::npos);
  }
  CHECK(solve_exact(t.family, t.scenarios, t.weight_vector(), EnumerationBudget{8}).value ==
        Rational(1));
}

TEST_CASE("median solver decides padded formula instances") {
  // padded instances put the decision at the median rank: the solver value
  // is zero exactly when some assignment satisfies at most `target` clauses
  SplitMix64 rng(31337);
  for (int round = 0; round < 6; ++round) {
    CnfFormula formula;
    formula.num_vars = 2 + static_cast<int>(rng.below(3));
    const int m = 2 + static_cast<int>(rng.below(4));
    for (int c = 0; c < m; ++c) {
      std::vector<int> clause;
      const int len = 1 + static_cast<int>(rng.below(3));
      for (int l = 0; l < len; ++l) {
        const int var = 1 + static_cast<int>(rng.below(formula.num_vars));
        clause.push_back(rng.below(2) ? var : -var);
      }
      formula.clauses.push_back(clause);
    }
    const int reachable = min_satisfied_clauses(formula);
    for (int target = 0; target <= m; ++target) {
      if (target == m / 2) continue;
      const Instance inst = gen_3sat_path(formula, SatMode::median, target);
      const SolveReport report = solve_median(inst.family, inst.scenarios);
      CHECK(report.value.is_zero() == (reachable <= target));
      CHECK(report.value == solve_exact(inst.family, inst.scenarios,
                                        inst.weight_vector())
                                .value);
    }
  }
}

TEST_CASE("concurrent readers see identical results") {
  const Instance inst = testutil::random_corpus_instance(FamilyKind::st_cut, 2718);
  SplitMix64 rng(99);
  const WeightVector w = testutil::random_weights(rng, inst.scenarios.num_scenarios());
  const SolveReport expected = solve_exact(inst.family, inst.scenarios, w);

  std::vector<std::thread> workers;
  std::vector<int> agree(4, 0);
  for (int t = 0; t < 4; ++t)
    workers.emplace_back([&, t] {
      for (int round = 0; round < 25; ++round) {
        const SolveReport report = solve_exact(inst.family, inst.scenarios, w);
        if (!reports_equal(report, expected)) return;
      }
      agree[t] = 1;
    });
  for (auto& worker : workers) worker.join();
  CHECK(agree == std::vector<int>(4, 1));
}

TEST_CASE("solvers raise on an infeasible family") {
  const ProblemFamily fam = ProblemFamily::path(3, 0, 2, {Arc{0, 1}, Arc{1, 0}});
  const ScenarioMatrix m({{1, 2}, {2, 1}});
  CHECK_THROWS_AS(solve_minmax(fam, m), InfeasibleError);
  CHECK_THROWS_AS(solve_minmin(fam, m), InfeasibleError);
  CHECK_THROWS_AS(solve_exact(fam, m, WeightScheme::average().expand(2)), InfeasibleError);
  CHECK_THROWS_AS(solve_quantile(fam, m, 2), InfeasibleError);
  CHECK_THROWS_AS(solve_hurwicz(fam, m, Rational(1, 2)), InfeasibleError);
  CHECK_THROWS_AS(solve_approx(fam, m, WeightScheme::average().expand(2)), InfeasibleError);
}

TEST_CASE("fixed input, identical report") {
  SplitMix64 rng(9182);
  for (FamilyKind kind : testutil::kAllKinds) {
    const Instance inst = testutil::random_corpus_instance(kind, rng.next());
    const WeightVector w = testutil::random_weights(rng, inst.scenarios.num_scenarios());
    CHECK(reports_equal(solve_exact(inst.family, inst.scenarios, w),
                        solve_exact(inst.family, inst.scenarios, w)));
    CHECK(reports_equal(solve_approx(inst.family, inst.scenarios, w),
                        solve_approx(inst.family, inst.scenarios, w)));
    CHECK(reports_equal(solve_minmax(inst.family, inst.scenarios),
                        solve_minmax(inst.family, inst.scenarios)));
  }
}

TEST_CASE("reported value always re-derives from the reported solution") {
  SplitMix64 rng(5678);
  for (FamilyKind kind : testutil::kAllKinds) {
    const Instance inst = testutil::random_corpus_instance(kind, rng.next());
    const int K = inst.scenarios.num_scenarios();
    const WeightVector w = testutil::random_weights(rng, K);
    const struct {
      SolveReport report;
      WeightVector weights;
    } runs[] = {
        {solve_exact(inst.family, inst.scenarios, w), w},
        {solve_approx(inst.family, inst.scenarios, w), w},
        {solve_minmax(inst.family, inst.scenarios), WeightScheme::max().expand(K)},
        {solve_minmin(inst.family, inst.scenarios), WeightScheme::min().expand(K)},
        {solve_median(inst.family, inst.scenarios), WeightScheme::median().expand(K)},
        {solve_hurwicz(inst.family, inst.scenarios, Rational(2, 5)),
         WeightScheme::hurwicz(Rational(2, 5)).expand(K)},
    };
    for (const auto& run : runs) {
      CHECK(run.report.value == owa(run.report.solution, inst.scenarios, run.weights));
      CHECK(run.report.per_scenario_costs == scenario_profile(run.report.solution, inst.scenarios));
      CHECK(is_member(inst.family, run.report.solution.elements()));
    }
  }
}
