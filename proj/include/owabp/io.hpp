#pragma once

#include <map>
#include <optional>
#include <string>

#include "owabp/instance.hpp"
#include "owabp/solvers.hpp"

namespace owabp {

inline constexpr int kFormatVersion = 1;

/// On-disk mirror of a SolveReport. All numeric values are exact: rationals
/// as "p/q" strings, times as integer microseconds.
struct ReportFile {
  int format_version = kFormatVersion;
  std::string instance_name;
  std::string algorithm;
  std::map<std::string, std::string> parameters;
  std::string value;
  std::vector<ElementId> solution;
  CostVector per_scenario_costs;
  std::optional<std::string> certified_ratio;
  long long oracle_calls = 0;
  long long elapsed_us = 0;
};

ReportFile make_report_file(const SolveReport& report, const std::string& instance_name,
                            std::map<std::string, std::string> parameters = {});

/// Instance files: structured JSON, format_version 1. Graphs are encoded as
/// (tail, head, element_id) triples over named nodes so the element-id to
/// cost-column mapping stays explicit.
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& instance);

ReportFile parse_report(const std::string& text);
std::string serialize_report(const ReportFile& report);

/// Human-readable "key: value" rendering of a report.
std::string format_report_text(const ReportFile& report);

Instance load_instance_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace owabp
