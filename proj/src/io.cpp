#include "owabp/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "owabp/errors.hpp"

namespace owabp {

namespace {

using nlohmann::json;

// keeps cost * weight products comfortably inside the 64-bit rationals
constexpr Cost kMaxCost = 1'000'000'000'000LL;

std::string node_name(const char* prefix, int index) {
  return prefix + std::to_string(index);
}

json problem_to_json(const ProblemFamily& fam) {
  json p;
  p["kind"] = family_kind_name(fam.kind());
  switch (fam.kind()) {
    case FamilyKind::selection:
      p["n"] = fam.num_elements();
      p["p"] = fam.selection_size();
      break;
    case FamilyKind::path:
    case FamilyKind::st_cut: {
      json nodes = json::array();
      for (int v = 0; v < fam.num_nodes(); ++v) nodes.push_back(node_name("n", v));
      p["nodes"] = std::move(nodes);
      p["source"] = node_name("n", fam.source());
      p["sink"] = node_name("n", fam.sink());
      json arcs = json::array();
      for (int id = 0; id < fam.num_elements(); ++id) {
        const Arc& a = fam.arcs()[id];
        arcs.push_back(json::array({node_name("n", a.tail), node_name("n", a.head), id}));
      }
      p["arcs"] = std::move(arcs);
      break;
    }
    case FamilyKind::spanning_tree: {
      json nodes = json::array();
      for (int v = 0; v < fam.num_nodes(); ++v) nodes.push_back(node_name("n", v));
      p["nodes"] = std::move(nodes);
      json edges = json::array();
      for (int id = 0; id < fam.num_elements(); ++id) {
        const Edge& e = fam.edges()[id];
        edges.push_back(json::array({node_name("n", e.a), node_name("n", e.b), id}));
      }
      p["edges"] = std::move(edges);
      break;
    }
    case FamilyKind::assignment: {
      json left = json::array(), right = json::array();
      for (int v = 0; v < fam.side(); ++v) {
        left.push_back(node_name("l", v));
        right.push_back(node_name("r", v));
      }
      p["left"] = std::move(left);
      p["right"] = std::move(right);
      json edges = json::array();
      for (int id = 0; id < fam.num_elements(); ++id) {
        const BipartiteEdge& e = fam.bipartite_edges()[id];
        edges.push_back(json::array({node_name("l", e.left), node_name("r", e.right), id}));
      }
      p["edges"] = std::move(edges);
      break;
    }
  }
  return p;
}

json weights_to_json(const WeightScheme& scheme) {
  json w;
  switch (scheme.kind) {
    case PresetKind::explicit_list: {
      json list = json::array();
      for (const Rational& r : scheme.weights) list.push_back(r.str());
      w["explicit"] = std::move(list);
      break;
    }
    case PresetKind::quantile:
      w["preset"] = "quantile";
      w["k"] = scheme.k;
      break;
    case PresetKind::hurwicz:
      w["preset"] = "hurwicz";
      w["alpha"] = scheme.alpha.str();
      break;
    default:
      w["preset"] = preset_kind_name(scheme.kind);
      break;
  }
  return w;
}

const json& require(const json& j, const char* key, const char* where) {
  auto it = j.find(key);
  if (it == j.end())
    throw ParseError(std::string(where) + " is missing field \"" + key + "\"");
  return *it;
}

int require_int(const json& j, const char* key, const char* where) {
  const json& v = require(j, key, where);
  if (!v.is_number_integer())
    throw ParseError(std::string(where) + " field \"" + key + "\" must be an integer");
  return v.get<int>();
}

std::string require_string(const json& j, const char* key, const char* where) {
  const json& v = require(j, key, where);
  if (!v.is_string())
    throw ParseError(std::string(where) + " field \"" + key + "\" must be a string");
  return v.get<std::string>();
}

Rational parse_rational_field(const json& v, const char* where) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (!v.is_string()) throw ParseError(std::string(where) + " must be \"p/q\" or an integer");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(std::string(where) + ": " + e.what());
  }
}

// (name, name, id) triples -> structures placed at their element-id slot
template <typename T>
std::vector<T> parse_triples(const json& list, const std::map<std::string, int>& left_nodes,
                             const std::map<std::string, int>& right_nodes, const char* what) {
  if (!list.is_array() || list.empty())
    throw ParseError(std::string(what) + " list must be a nonempty array");
  std::vector<T> out(list.size());
  std::vector<char> seen(list.size(), 0);
  for (const json& triple : list) {
    if (!triple.is_array() || triple.size() != 3)
      throw ParseError(std::string(what) + " entries must be [from, to, element_id] triples");
    if (!triple[0].is_string() || !triple[1].is_string() || !triple[2].is_number_integer())
      throw ParseError(std::string(what) + " triple has wrong field types");
    const auto from = left_nodes.find(triple[0].get<std::string>());
    const auto to = right_nodes.find(triple[1].get<std::string>());
    if (from == left_nodes.end() || to == right_nodes.end())
      throw ParseError(std::string(what) + " references unknown node");
    const long long id = triple[2].get<long long>();
    if (id < 0 || id >= static_cast<long long>(list.size()))
      throw ParseError(std::string(what) + " element id " + std::to_string(id) +
                       " outside [0, " + std::to_string(list.size()) + ")");
    if (seen[id])
      throw ParseError(std::string(what) + " element id " + std::to_string(id) + " repeated");
    seen[id] = 1;
    out[id] = T{from->second, to->second};
  }
  return out;
}

std::map<std::string, int> parse_node_list(const json& list, const char* what) {
  if (!list.is_array() || list.empty())
    throw ParseError(std::string(what) + " must be a nonempty array of node names");
  std::map<std::string, int> index;
  int next = 0;
  for (const json& name : list) {
    if (!name.is_string()) throw ParseError(std::string(what) + " entries must be strings");
    if (!index.emplace(name.get<std::string>(), next++).second)
      throw ParseError(std::string(what) + " repeats node \"" + name.get<std::string>() + "\"");
  }
  return index;
}

ProblemFamily parse_problem(const json& p) {
  const std::string kind_name = require_string(p, "kind", "problem");
  const FamilyKind kind = family_kind_from_name(kind_name);
  try {
    switch (kind) {
      case FamilyKind::selection:
        return ProblemFamily::selection(require_int(p, "n", "problem"),
                                        require_int(p, "p", "problem"));
      case FamilyKind::path:
      case FamilyKind::st_cut: {
        const auto nodes = parse_node_list(require(p, "nodes", "problem"), "problem nodes");
        const auto source = nodes.find(require_string(p, "source", "problem"));
        const auto sink = nodes.find(require_string(p, "sink", "problem"));
        if (source == nodes.end() || sink == nodes.end())
          throw ParseError("problem source/sink not in node list");
        auto arcs = parse_triples<Arc>(require(p, "arcs", "problem"), nodes, nodes, "arc");
        return kind == FamilyKind::path
                   ? ProblemFamily::path(static_cast<int>(nodes.size()), source->second,
                                         sink->second, std::move(arcs))
                   : ProblemFamily::st_cut(static_cast<int>(nodes.size()), source->second,
                                           sink->second, std::move(arcs));
      }
      case FamilyKind::spanning_tree: {
        const auto nodes = parse_node_list(require(p, "nodes", "problem"), "problem nodes");
        auto edges = parse_triples<Edge>(require(p, "edges", "problem"), nodes, nodes, "edge");
        return ProblemFamily::spanning_tree(static_cast<int>(nodes.size()), std::move(edges));
      }
      case FamilyKind::assignment: {
        const auto left = parse_node_list(require(p, "left", "problem"), "problem left nodes");
        const auto right = parse_node_list(require(p, "right", "problem"), "problem right nodes");
        if (left.size() != right.size())
          throw ParseError("assignment sides must have equal size");
        auto edges = parse_triples<BipartiteEdge>(require(p, "edges", "problem"), left, right,
                                                  "edge");
        return ProblemFamily::assignment(static_cast<int>(left.size()), std::move(edges));
      }
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid problem structure: ") + e.what());
  }
  throw ParseError("unknown problem kind: \"" + kind_name + "\"");
}

ScenarioMatrix parse_scenarios(const json& s, int num_elements) {
  if (!s.is_array() || s.empty())
    throw ParseError("scenarios must be a nonempty array of cost rows");
  std::vector<CostVector> rows;
  for (const json& row : s) {
    if (!row.is_array() || static_cast<int>(row.size()) != num_elements)
      throw ParseError("each scenario row needs exactly " + std::to_string(num_elements) +
                       " costs");
    CostVector costs;
    for (const json& c : row) {
      if (!c.is_number_integer() || c.is_number_float())
        throw ParseError("scenario costs must be integers");
      const long long value = c.get<long long>();
      if (value < 0) throw ParseError("scenario costs must be nonnegative");
      if (value > kMaxCost)
        throw ParseError("scenario cost " + std::to_string(value) + " exceeds the supported " +
                         std::to_string(kMaxCost));
      costs.push_back(value);
    }
    rows.push_back(std::move(costs));
  }
  return ScenarioMatrix(std::move(rows));
}

WeightScheme parse_weights(const json& w) {
  if (!w.is_object()) throw ParseError("weights must be an object");
  if (w.contains("explicit")) {
    const json& list = w["explicit"];
    if (!list.is_array() || list.empty())
      throw ParseError("explicit weights must be a nonempty array");
    std::vector<Rational> values;
    for (const json& r : list) values.push_back(parse_rational_field(r, "weight"));
    return WeightScheme::explicit_list(std::move(values));
  }
  const std::string preset = require_string(w, "preset", "weights");
  if (preset == "max") return WeightScheme::max();
  if (preset == "min") return WeightScheme::min();
  if (preset == "average") return WeightScheme::average();
  if (preset == "median") return WeightScheme::median();
  if (preset == "quantile") return WeightScheme::quantile(require_int(w, "k", "weights"));
  if (preset == "hurwicz")
    return WeightScheme::hurwicz(parse_rational_field(require(w, "alpha", "weights"), "alpha"));
  throw ParseError("unknown weight preset: \"" + preset + "\"");
}

}  // namespace

Instance parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("instance is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("instance must be a JSON object");
  if (require_int(j, "format_version", "instance") != kFormatVersion)
    throw ParseError("unsupported instance format_version");

  try {
    ProblemFamily family = parse_problem(require(j, "problem", "instance"));
    ScenarioMatrix scenarios =
        parse_scenarios(require(j, "scenarios", "instance"), family.num_elements());
    WeightScheme weights = parse_weights(require(j, "weights", "instance"));

    InstanceMetadata metadata;
    if (j.contains("metadata")) {
      const json& md = j["metadata"];
      if (!md.is_object()) throw ParseError("metadata must be an object");
      if (md.contains("name")) metadata.name = md["name"].get<std::string>();
      if (md.contains("provenance")) metadata.provenance = md["provenance"].get<std::string>();
      if (md.contains("seed")) {
        if (!md["seed"].is_number_unsigned() && !md["seed"].is_number_integer())
          throw ParseError("metadata seed must be an integer");
        metadata.seed = md["seed"].get<std::uint64_t>();
      }
    }

    Instance instance{std::move(family), std::move(scenarios), std::move(weights),
                      std::move(metadata)};
    validate_instance(instance);
    return instance;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed instance: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("inconsistent instance: ") + e.what());
  }
}

std::string serialize_instance(const Instance& instance) {
  validate_instance(instance);
  json j;
  j["format_version"] = kFormatVersion;
  j["problem"] = problem_to_json(instance.family);
  json scenarios = json::array();
  for (const CostVector& row : instance.scenarios.rows()) scenarios.push_back(row);
  j["scenarios"] = std::move(scenarios);
  j["weights"] = weights_to_json(instance.weights);
  json md;
  if (!instance.metadata.name.empty()) md["name"] = instance.metadata.name;
  if (!instance.metadata.provenance.empty()) md["provenance"] = instance.metadata.provenance;
  if (instance.metadata.seed) md["seed"] = *instance.metadata.seed;
  if (!md.empty()) j["metadata"] = std::move(md);
  return j.dump(2) + "\n";
}

ReportFile make_report_file(const SolveReport& report, const std::string& instance_name,
                            std::map<std::string, std::string> parameters) {
  ReportFile file;
  file.instance_name = instance_name;
  file.algorithm = report.algorithm;
  file.parameters = std::move(parameters);
  file.value = report.value.str();
  file.solution = report.solution.elements();
  file.per_scenario_costs = report.per_scenario_costs;
  if (report.certified_ratio) file.certified_ratio = report.certified_ratio->str();
  file.oracle_calls = report.oracle_calls;
  file.elapsed_us = report.elapsed.count();
  return file;
}

std::string serialize_report(const ReportFile& report) {
  json j;
  j["format_version"] = report.format_version;
  j["instance"] = report.instance_name;
  j["algorithm"] = report.algorithm;
  if (!report.parameters.empty()) j["parameters"] = report.parameters;
  j["value"] = report.value;
  j["solution"] = report.solution;
  j["per_scenario_costs"] = report.per_scenario_costs;
  if (report.certified_ratio) j["certified_ratio"] = *report.certified_ratio;
  j["oracle_calls"] = report.oracle_calls;
  j["elapsed_us"] = report.elapsed_us;
  return j.dump(2) + "\n";
}

ReportFile parse_report(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("report is not valid JSON: ") + e.what());
  }
  try {
    ReportFile report;
    report.format_version = require_int(j, "format_version", "report");
    if (report.format_version != kFormatVersion)
      throw ParseError("unsupported report format_version");
    report.instance_name = require_string(j, "instance", "report");
    report.algorithm = require_string(j, "algorithm", "report");
    if (j.contains("parameters"))
      report.parameters = j["parameters"].get<std::map<std::string, std::string>>();
    report.value = require_string(j, "value", "report");
    Rational::parse(report.value);  // must round-trip
    report.solution = require(j, "solution", "report").get<std::vector<ElementId>>();
    report.per_scenario_costs = require(j, "per_scenario_costs", "report").get<CostVector>();
    if (j.contains("certified_ratio"))
      report.certified_ratio = j["certified_ratio"].get<std::string>();
    report.oracle_calls = require(j, "oracle_calls", "report").get<long long>();
    report.elapsed_us = require(j, "elapsed_us", "report").get<long long>();
    return report;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

std::string format_report_text(const ReportFile& report) {
  std::ostringstream out;
  out << "instance: " << report.instance_name << "\n";
  out << "algorithm: " << report.algorithm << "\n";
  for (const auto& [key, value] : report.parameters) out << key << ": " << value << "\n";
  out << "value: " << report.value << "\n";
  out << "solution:";
  for (ElementId e : report.solution) out << " e" << e;
  out << "\n";
  out << "per_scenario_costs:";
  for (Cost c : report.per_scenario_costs) out << " " << c;
  out << "\n";
  if (report.certified_ratio) out << "certified_ratio: " << *report.certified_ratio << "\n";
  out << "oracle_calls: " << report.oracle_calls << "\n";
  out << "elapsed_us: " << report.elapsed_us << "\n";
  return out.str();
}

Instance load_instance_file(const std::string& path) { return parse_instance(read_text_file(path)); }

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
  if (!out) throw std::runtime_error("failed writing file: " + path);
}

}  // namespace owabp
