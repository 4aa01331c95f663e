#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "owabp/io.hpp"

namespace fs = std::filesystem;

namespace {

struct CommandResult {
  int exit_code;
  std::string output;  // stdout only; stderr goes to its own file
  std::string errors;
};

const char* cli_path() {
  const char* path = std::getenv("OWABP_CLI");
  REQUIRE_MESSAGE(path != nullptr, "OWABP_CLI must point at the built binary");
  return path;
}

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "owabp-cli-test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

CommandResult run_cli(const std::string& args) {
  const fs::path out = scratch_dir() / "stdout.txt";
  const fs::path err = scratch_dir() / "stderr.txt";
  const std::string command =
      std::string(cli_path()) + " " + args + " > " + out.string() + " 2> " + err.string();
  const int raw = std::system(command.c_str());
  REQUIRE(raw != -1);
  return CommandResult{WEXITSTATUS(raw), owabp::read_text_file(out.string()),
                       owabp::read_text_file(err.string())};
}

std::string file_in_scratch(const std::string& name, const std::string& content) {
  const fs::path path = scratch_dir() / name;
  std::ofstream stream(path);
  stream << content;
  return path.string();
}

}  // namespace

TEST_CASE("generate + solve + verify on the tight example") {
  const std::string instance = (scratch_dir() / "table1.json").string();
  CHECK(run_cli("generate table1 --k 3 --out " + instance).exit_code == 0);

  const CommandResult exact = run_cli("solve " + instance + " --algorithm exact");
  CHECK(exact.exit_code == 0);
  const owabp::ReportFile exact_report = owabp::parse_report(exact.output);
  CHECK(exact_report.value == "1");
  CHECK(exact_report.algorithm == "exact");

  const CommandResult minmax = run_cli("solve " + instance + " --algorithm minmax");
  CHECK(minmax.exit_code == 0);
  CHECK(owabp::parse_report(minmax.output).value == "3");

  const CommandResult text =
      run_cli("solve " + instance + " --algorithm minmax --format text");
  CHECK(text.exit_code == 0);
  CHECK(text.output.find("value: 3") != std::string::npos);

  const std::string report_path = (scratch_dir() / "report.json").string();
  CHECK(run_cli("solve " + instance + " --algorithm approx --out " + report_path).exit_code ==
        0);
  const owabp::ReportFile written = owabp::parse_report(owabp::read_text_file(report_path));
  CHECK(written.certified_ratio == std::optional<std::string>("3"));
  CHECK(written.value == "1");

  for (const char* algorithm : {"exact", "minmax", "minmin", "median", "approx"})
    CHECK(run_cli("verify " + instance + " --algorithm " + algorithm).exit_code == 0);
  CHECK(run_cli("verify " + instance + " --algorithm quantile --k 1").exit_code == 0);
  CHECK(run_cli("verify " + instance + " --algorithm hurwicz --alpha 1/4").exit_code == 0);
}

TEST_CASE("generation is byte-deterministic") {
  const std::string a = (scratch_dir() / "rand-a.json").string();
  const std::string b = (scratch_dir() / "rand-b.json").string();
  const std::string flags = "generate random --family st_cut --elements 9 --scenarios 3 "
                            "--cost-max 7 --seed 42 --out ";
  CHECK(run_cli(flags + a).exit_code == 0);
  CHECK(run_cli(flags + b).exit_code == 0);
  CHECK(owabp::read_text_file(a) == owabp::read_text_file(b));
}

TEST_CASE("3sat generation feeds the solver") {
  const std::string cnf = file_in_scratch("tiny.cnf", "p cnf 2 2\n1 2 0\n-1 2 0\n");
  const std::string instance = (scratch_dir() / "sat.json").string();
  CHECK(run_cli("generate 3sat " + cnf + " --mode average --out " + instance).exit_code == 0);
  const CommandResult solved = run_cli("solve " + instance + " --algorithm exact");
  CHECK(solved.exit_code == 0);
  CHECK(owabp::parse_report(solved.output).value == "1/2");

  const std::string median_instance = (scratch_dir() / "sat-median.json").string();
  CHECK(run_cli("generate 3sat " + cnf + " --mode median --l 2 --out " + median_instance)
            .exit_code == 0);
  // boundary target floor(m/2) is rejected as a parameter error
  CHECK(run_cli("generate 3sat " + cnf + " --mode median --l 1").exit_code == 2);
}

TEST_CASE("exit codes distinguish failure classes") {
  // parse error: weights sum to 2
  const std::string bad_weights = file_in_scratch("bad-weights.json", R"({
    "format_version": 1,
    "problem": {"kind": "selection", "n": 2, "p": 1},
    "scenarios": [[1, 2], [2, 1]],
    "weights": {"explicit": ["1", "1"]}
  })");
  CHECK(run_cli("solve " + bad_weights).exit_code == 2);

  // infeasible: no arc ever reaches the sink
  const std::string infeasible = file_in_scratch("infeasible.json", R"({
    "format_version": 1,
    "problem": {
      "kind": "path", "nodes": ["a", "b", "c"], "source": "a", "sink": "c",
      "arcs": [["a", "b", 0], ["b", "a", 1]]
    },
    "scenarios": [[1, 2]],
    "weights": {"preset": "max"}
  })");
  CHECK(run_cli("solve " + infeasible + " --algorithm minmax").exit_code == 3);

  // budget exceeded, in the solver and in the verification oracle
  const std::string table1 = (scratch_dir() / "budget-table1.json").string();
  CHECK(run_cli("generate table1 --k 3 --out " + table1).exit_code == 0);
  CHECK(run_cli("solve " + table1 + " --algorithm exact --budget 1").exit_code == 4);
  CHECK(run_cli("verify " + table1 + " --algorithm minmax --budget 2").exit_code == 4);

  // usage problems
  CHECK(run_cli("solve " + table1 + " --algorithm newton").exit_code == 2);
  CHECK(run_cli("solve /nonexistent/file.json").exit_code == 5);
  CHECK(run_cli("solve " + table1 + " --algorithm quantile").exit_code == 2);  // missing --k

  // diagnostics go to stderr, never stdout
  const CommandResult failure = run_cli("solve " + bad_weights);
  CHECK(failure.output.empty());
  CHECK(!failure.errors.empty());
}

TEST_CASE("bench runs the full algorithm battery") {
  const fs::path corpus = scratch_dir() / "corpus";
  fs::create_directories(corpus);
  CHECK(run_cli("generate table1 --k 2 --out " + (corpus / "t2.json").string()).exit_code == 0);
  CHECK(run_cli("generate table1 --k 3 --out " + (corpus / "t3.json").string()).exit_code == 0);
  file_in_scratch("corpus/garbage.json", "{ not json");

  const CommandResult bench = run_cli("bench " + corpus.string());
  CHECK(bench.exit_code == 0);
  CHECK(bench.errors.find("skipping") != std::string::npos);
  // 2 usable instances x 7 algorithms, plus header
  int rows = 0;
  for (char c : bench.output)
    if (c == '\n') ++rows;
  CHECK(bench.output.find("worst empirical approx ratio") != std::string::npos);
  CHECK(rows >= 15);

  const fs::path empty = scratch_dir() / "empty-corpus";
  fs::create_directories(empty);
  CHECK(run_cli("bench " + empty.string()).exit_code == 1);
}
