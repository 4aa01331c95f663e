// owabp command line: solve / verify / generate / bench over instance files.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "owabp/errors.hpp"
#include "owabp/generators.hpp"
#include "owabp/io.hpp"
#include "owabp/oracle.hpp"
#include "owabp/solvers.hpp"

namespace {

using namespace owabp;

// exit codes, documented in the README
constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // verification mismatch, bench with no usable input
constexpr int kExitParse = 2;    // malformed file, invalid parameters, bad usage
constexpr int kExitInfeasible = 3;
constexpr int kExitBudget = 4;
constexpr int kExitIo = 5;

struct SolverChoice {
  std::string algorithm = "exact";
  std::optional<std::string> alpha_text;
  std::optional<int> quantile_k;
  std::optional<long long> budget;
};

struct AlgorithmRun {
  SolveReport report;
  WeightVector effective_weights;  // what the oracle must score against
  std::map<std::string, std::string> parameters;
};

Rational resolve_alpha(const Instance& instance, const SolverChoice& choice) {
  if (choice.alpha_text) return Rational::parse(*choice.alpha_text);
  if (instance.weights.kind == PresetKind::hurwicz) return instance.weights.alpha;
  throw std::invalid_argument("hurwicz needs --alpha (instance carries no hurwicz preset)");
}

int resolve_quantile(const Instance& instance, const SolverChoice& choice) {
  if (choice.quantile_k) return *choice.quantile_k;
  if (instance.weights.kind == PresetKind::quantile) return instance.weights.k;
  throw std::invalid_argument("quantile needs --k (instance carries no quantile preset)");
}

AlgorithmRun run_algorithm(const Instance& instance, const SolverChoice& choice) {
  const auto& fam = instance.family;
  const auto& m = instance.scenarios;
  const int K = m.num_scenarios();
  EnumerationBudget budget;
  if (choice.budget) budget.max_candidates = *choice.budget;

  std::map<std::string, std::string> params;
  if (choice.budget) params["budget"] = std::to_string(*choice.budget);

  if (choice.algorithm == "exact") {
    const WeightVector w = instance.weight_vector();
    return {solve_exact(fam, m, w, budget), w, std::move(params)};
  }
  if (choice.algorithm == "minmax")
    return {solve_minmax(fam, m), WeightScheme::max().expand(K), std::move(params)};
  if (choice.algorithm == "minmin")
    return {solve_minmin(fam, m), WeightScheme::min().expand(K), std::move(params)};
  if (choice.algorithm == "hurwicz") {
    const Rational alpha = resolve_alpha(instance, choice);
    params["alpha"] = alpha.str();
    return {solve_hurwicz(fam, m, alpha, budget), WeightScheme::hurwicz(alpha).expand(K),
            std::move(params)};
  }
  if (choice.algorithm == "quantile") {
    const int k = resolve_quantile(instance, choice);
    params["k"] = std::to_string(k);
    return {solve_quantile(fam, m, k), WeightScheme::quantile(k).expand(K), std::move(params)};
  }
  if (choice.algorithm == "median")
    return {solve_median(fam, m), WeightScheme::median().expand(K), std::move(params)};
  if (choice.algorithm == "approx") {
    const WeightVector w = instance.weight_vector();
    return {solve_approx(fam, m, w), w, std::move(params)};
  }
  throw std::invalid_argument("unknown algorithm: \"" + choice.algorithm + "\"");
}

std::string instance_display_name(const Instance& instance, const std::string& path) {
  return instance.metadata.name.empty() ? path : instance.metadata.name;
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty())
    std::cout << content;
  else
    write_text_file(out_path, content);
}

int cmd_solve(const std::string& instance_path, const SolverChoice& choice,
              const std::string& out_path, const std::string& format) {
  const Instance instance = load_instance_file(instance_path);
  const AlgorithmRun run = run_algorithm(instance, choice);
  const ReportFile report = make_report_file(
      run.report, instance_display_name(instance, instance_path), run.parameters);
  emit(format == "text" ? format_report_text(report) : serialize_report(report), out_path);
  return kExitOk;
}

int cmd_verify(const std::string& instance_path, const SolverChoice& choice) {
  const Instance instance = load_instance_file(instance_path);
  const AlgorithmRun run = run_algorithm(instance, choice);
  const long long oracle_budget = choice.budget ? *choice.budget : kDefaultEnumerationBudget;
  const SolveReport oracle =
      brute_force_owa(instance.family, instance.scenarios, run.effective_weights, oracle_budget);

  std::cout << "solver (" << run.report.algorithm << "): " << run.report.value.str() << "\n";
  std::cout << "oracle: " << oracle.value.str() << "\n";
  if (run.report.algorithm == "approx") {
    const Rational bound = *run.report.certified_ratio * oracle.value;
    const bool ok = run.report.value <= bound;
    std::cout << "guarantee: value <= " << run.report.certified_ratio->str()
              << " * optimum = " << bound.str() << (ok ? " holds" : " VIOLATED") << "\n";
    return ok ? kExitOk : kExitFailure;
  }
  const bool ok = run.report.value == oracle.value;
  std::cout << (ok ? "match" : "MISMATCH") << "\n";
  return ok ? kExitOk : kExitFailure;
}

int cmd_generate_table1(int k, const std::string& out_path) {
  emit(serialize_instance(gen_table1(k)), out_path);
  return kExitOk;
}

int cmd_generate_3sat(const std::string& cnf_path, const std::string& mode_name,
                      std::optional<int> target, const std::string& out_path) {
  const CnfFormula formula = parse_dimacs(read_text_file(cnf_path));
  SatMode mode;
  if (mode_name == "average")
    mode = SatMode::average;
  else if (mode_name == "median")
    mode = SatMode::median;
  else if (mode_name == "nondecreasing")
    mode = SatMode::nondecreasing;
  else
    throw std::invalid_argument("unknown 3sat mode: \"" + mode_name + "\"");
  emit(serialize_instance(gen_3sat_path(formula, mode, target)), out_path);
  return kExitOk;
}

WeightScheme scheme_from_flags(const std::string& preset, const std::optional<std::string>& alpha,
                               std::optional<int> k) {
  if (preset == "max") return WeightScheme::max();
  if (preset == "min") return WeightScheme::min();
  if (preset == "average") return WeightScheme::average();
  if (preset == "median") return WeightScheme::median();
  if (preset == "quantile") {
    if (!k) throw std::invalid_argument("preset quantile needs --k");
    return WeightScheme::quantile(*k);
  }
  if (preset == "hurwicz") {
    if (!alpha) throw std::invalid_argument("preset hurwicz needs --alpha");
    return WeightScheme::hurwicz(Rational::parse(*alpha));
  }
  throw std::invalid_argument("unknown weight preset: \"" + preset + "\"");
}

int cmd_generate_random(const RandomInstanceSpec& spec, const std::string& out_path) {
  emit(serialize_instance(gen_random(spec)), out_path);
  return kExitOk;
}

// one row of the bench table
struct BenchRow {
  std::string instance;
  std::string algorithm;
  std::string value = "-";
  std::string elapsed_us = "-";
  std::string oracle = "-";
  std::string gap = "-";
  std::string ratio = "-";
};

std::string render_table(const std::vector<BenchRow>& rows) {
  const std::vector<std::string> header{"instance", "algorithm", "value",
                                        "elapsed_us", "oracle", "gap", "ratio"};
  std::vector<std::vector<std::string>> cells{header};
  for (const BenchRow& r : rows)
    cells.push_back({r.instance, r.algorithm, r.value, r.elapsed_us, r.oracle, r.gap, r.ratio});
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << row[c];
      if (c + 1 < row.size()) out << std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << "\n";
  }
  return out.str();
}

int cmd_bench(const std::string& dir, const std::string& out_path,
              std::optional<long long> budget_flag) {
  namespace fs = std::filesystem;
  std::vector<std::string> paths;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir, ec))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      paths.push_back(entry.path().string());
  if (ec) {
    std::cerr << "error: cannot read directory " << dir << ": " << ec.message() << "\n";
    return kExitIo;
  }
  std::sort(paths.begin(), paths.end());
  if (paths.empty()) {
    std::cerr << "error: no .json instances under " << dir << "\n";
    return kExitFailure;
  }

  const long long oracle_budget = budget_flag ? *budget_flag : kDefaultEnumerationBudget;
  std::vector<BenchRow> rows;
  // worst observed empirical ratio of the approximation, per weight scheme
  std::map<std::string, std::pair<Rational, bool>> worst_ratio;  // (ratio, unbounded?)
  int usable = 0;

  for (const std::string& path : paths) {
    std::optional<Instance> instance;
    try {
      instance = load_instance_file(path);
    } catch (const std::exception& e) {
      std::cerr << "warning: skipping " << path << ": " << e.what() << "\n";
      continue;
    }
    ++usable;
    const std::string name = instance_display_name(*instance, path);
    const int K = instance->scenarios.num_scenarios();
    const std::vector<SolverChoice> algorithms = {
        {"exact", std::nullopt, std::nullopt, budget_flag},
        {"minmax", std::nullopt, std::nullopt, std::nullopt},
        {"minmin", std::nullopt, std::nullopt, std::nullopt},
        {"hurwicz",
         instance->weights.kind == PresetKind::hurwicz
             ? std::optional<std::string>(instance->weights.alpha.str())
             : std::optional<std::string>("1/2"),
         std::nullopt, budget_flag},
        {"quantile", std::nullopt,
         instance->weights.kind == PresetKind::quantile ? instance->weights.k : std::min(2, K),
         std::nullopt},
        {"median", std::nullopt, std::nullopt, std::nullopt},
        {"approx", std::nullopt, std::nullopt, std::nullopt}};

    for (const SolverChoice& choice : algorithms) {
      BenchRow row;
      row.instance = name;
      row.algorithm = choice.algorithm;
      try {
        const AlgorithmRun run = run_algorithm(*instance, choice);
        row.value = run.report.value.str();
        row.elapsed_us = std::to_string(run.report.elapsed.count());
        try {
          const SolveReport oracle = brute_force_owa(instance->family, instance->scenarios,
                                                     run.effective_weights, oracle_budget);
          row.oracle = oracle.value.str();
          row.gap = (run.report.value - oracle.value).str();
          if (choice.algorithm == "approx") {
            const std::string scheme = preset_kind_name(instance->weights.kind);
            if (!oracle.value.is_zero()) {
              const Rational ratio = run.report.value / oracle.value;
              row.ratio = ratio.str();
              auto [it, inserted] = worst_ratio.try_emplace(scheme, ratio, false);
              if (!inserted && !it->second.second && ratio > it->second.first)
                it->second.first = ratio;
            } else if (run.report.value.is_zero()) {
              row.ratio = "1";
              worst_ratio.try_emplace(scheme, Rational(1), false);
            } else {
              row.ratio = "unbounded";
              worst_ratio[scheme] = {Rational(0), true};
            }
          }
        } catch (const BudgetExceededError&) {
          // oracle columns stay "-": the feasible set is too large to certify
        }
      } catch (const BudgetExceededError&) {
        row.value = "budget-exceeded";
      } catch (const InfeasibleError&) {
        row.value = "infeasible";
      }
      rows.push_back(std::move(row));
    }
  }

  if (usable == 0) {
    std::cerr << "error: no readable instance in " << dir << "\n";
    return kExitFailure;
  }

  // rows come out sorted by instance name, algorithms keeping battery order
  std::stable_sort(rows.begin(), rows.end(),
                   [](const BenchRow& a, const BenchRow& b) { return a.instance < b.instance; });

  std::ostringstream out;
  out << render_table(rows);
  if (!worst_ratio.empty()) {
    out << "\nworst empirical approx ratio per weight scheme:\n";
    for (const auto& [scheme, entry] : worst_ratio)
      out << "  " << scheme << ": " << (entry.second ? "unbounded" : entry.first.str()) << "\n";
  }
  emit(out.str(), out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"OWA bottleneck optimization under discrete cost scenarios"};
  app.require_subcommand(1);

  std::string instance_path, out_path, format = "structured";
  SolverChoice choice;

  auto add_solver_flags = [&](CLI::App* cmd, bool with_output) {
    cmd->add_option("instance", instance_path, "instance file")->required();
    cmd->add_option("--algorithm", choice.algorithm,
                    "exact|minmax|minmin|hurwicz|quantile|median|approx");
    cmd->add_option("--alpha", choice.alpha_text, "hurwicz pessimism weight, e.g. 1/3");
    cmd->add_option("--k", choice.quantile_k, "quantile position, 1-based");
    cmd->add_option("--budget", choice.budget, "enumeration budget override");
    if (with_output) {
      cmd->add_option("--out", out_path, "write output here instead of stdout");
      cmd->add_option("--format", format, "structured|text")
          ->check(CLI::IsMember({"structured", "text"}));
    }
  };

  CLI::App* solve = app.add_subcommand("solve", "run one algorithm, write a report");
  add_solver_flags(solve, true);

  CLI::App* verify = app.add_subcommand("verify", "compare an algorithm against brute force");
  add_solver_flags(verify, false);

  CLI::App* generate = app.add_subcommand("generate", "construct named instance families");
  generate->require_subcommand(1);

  int table1_k = 3;
  CLI::App* gen_t1 = generate->add_subcommand("table1", "tight approximation example");
  gen_t1->add_option("--k", table1_k, "scenario count, >= 2")->required();
  gen_t1->add_option("--out", out_path, "output path");

  std::string cnf_path, sat_mode = "average";
  std::optional<int> sat_target;
  CLI::App* gen_sat = generate->add_subcommand("3sat", "path instance from a CNF formula");
  gen_sat->add_option("cnf", cnf_path, "DIMACS CNF file")->required();
  gen_sat->add_option("--mode", sat_mode, "average|median|nondecreasing");
  gen_sat->add_option("--l", sat_target, "target satisfied-clause count");
  gen_sat->add_option("--out", out_path, "output path");

  RandomInstanceSpec random_spec;
  std::string random_family = "selection", random_preset = "average";
  std::optional<std::string> random_alpha;
  std::optional<int> random_k;
  CLI::App* gen_rand = generate->add_subcommand("random", "seeded random instance");
  gen_rand->add_option("--family", random_family,
                       "selection|path|spanning_tree|st_cut|assignment");
  gen_rand->add_option("--elements", random_spec.num_elements, "element count");
  gen_rand->add_option("--p", random_spec.selection_size, "selection size");
  gen_rand->add_option("--nodes", random_spec.num_nodes, "node count (per side for assignment)");
  gen_rand->add_option("--scenarios", random_spec.num_scenarios, "scenario count");
  gen_rand->add_option("--cost-max", random_spec.cost_max, "largest cost value");
  gen_rand->add_option("--seed", random_spec.seed, "generator seed");
  gen_rand->add_option("--preset", random_preset, "weight preset");
  gen_rand->add_option("--alpha", random_alpha, "hurwicz alpha");
  gen_rand->add_option("--k", random_k, "quantile position");
  gen_rand->add_option("--out", out_path, "output path");

  std::string bench_dir;
  std::optional<long long> bench_budget;
  CLI::App* bench = app.add_subcommand("bench", "run every algorithm over a corpus directory");
  bench->add_option("dir", bench_dir, "directory of .json instances")->required();
  bench->add_option("--out", out_path, "output path");
  bench->add_option("--budget", bench_budget, "exact-solver and oracle budget");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return cmd_solve(instance_path, choice, out_path, format);
    if (verify->parsed()) return cmd_verify(instance_path, choice);
    if (gen_t1->parsed()) return cmd_generate_table1(table1_k, out_path);
    if (gen_sat->parsed()) return cmd_generate_3sat(cnf_path, sat_mode, sat_target, out_path);
    if (gen_rand->parsed()) {
      random_spec.kind = family_kind_from_name(random_family);
      random_spec.weights = scheme_from_flags(random_preset, random_alpha, random_k);
      return cmd_generate_random(random_spec, out_path);
    }
    if (bench->parsed()) return cmd_bench(bench_dir, out_path, bench_budget);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const InfeasibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}
