#include "owabp/family.hpp"

#include <stdexcept>

namespace owabp {

namespace {

void check_node(int node, int num_nodes, const char* what) {
  if (node < 0 || node >= num_nodes)
    throw std::invalid_argument(std::string(what) + " node out of range");
}

// sink reachable from source in the full digraph
bool reachable(int num_nodes, int source, int sink, const std::vector<Arc>& arcs) {
  std::vector<char> seen(num_nodes, 0);
  std::vector<int> stack{source};
  seen[source] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    if (u == sink) return true;
    for (const Arc& a : arcs)
      if (a.tail == u && !seen[a.head]) {
        seen[a.head] = 1;
        stack.push_back(a.head);
      }
  }
  return false;
}

}  // namespace

std::string family_kind_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::selection: return "selection";
    case FamilyKind::path: return "path";
    case FamilyKind::spanning_tree: return "spanning_tree";
    case FamilyKind::st_cut: return "st_cut";
    case FamilyKind::assignment: return "assignment";
  }
  throw std::logic_error("unknown family kind");
}

FamilyKind family_kind_from_name(const std::string& name) {
  if (name == "selection") return FamilyKind::selection;
  if (name == "path") return FamilyKind::path;
  if (name == "spanning_tree") return FamilyKind::spanning_tree;
  if (name == "st_cut") return FamilyKind::st_cut;
  if (name == "assignment") return FamilyKind::assignment;
  throw std::invalid_argument("unknown problem family: \"" + name + "\"");
}

ProblemFamily ProblemFamily::selection(int n, int p) {
  if (n < 1) throw std::invalid_argument("selection needs at least one element");
  if (p < 1 || p > n)
    throw std::invalid_argument("selection size must lie in [1, n], got " + std::to_string(p));
  return ProblemFamily(FamilyKind::selection, Selection{n, p});
}

ProblemFamily ProblemFamily::path(int num_nodes, int source, int sink, std::vector<Arc> arcs) {
  if (num_nodes < 2) throw std::invalid_argument("path graph needs at least two nodes");
  check_node(source, num_nodes, "source");
  check_node(sink, num_nodes, "sink");
  if (source == sink) throw std::invalid_argument("source and sink must differ");
  if (arcs.empty()) throw std::invalid_argument("path graph needs at least one arc");
  for (const Arc& a : arcs) {
    check_node(a.tail, num_nodes, "arc tail");
    check_node(a.head, num_nodes, "arc head");
    if (a.tail == a.head) throw std::invalid_argument("self-loop arc not allowed");
  }
  return ProblemFamily(FamilyKind::path, Digraph{num_nodes, source, sink, std::move(arcs)});
}

ProblemFamily ProblemFamily::spanning_tree(int num_nodes, std::vector<Edge> edges) {
  if (num_nodes < 2) throw std::invalid_argument("spanning tree graph needs at least two nodes");
  if (edges.empty()) throw std::invalid_argument("spanning tree graph needs at least one edge");
  for (const Edge& e : edges) {
    check_node(e.a, num_nodes, "edge endpoint");
    check_node(e.b, num_nodes, "edge endpoint");
    if (e.a == e.b) throw std::invalid_argument("self-loop edge not allowed");
  }
  return ProblemFamily(FamilyKind::spanning_tree, Graph{num_nodes, std::move(edges)});
}

ProblemFamily ProblemFamily::st_cut(int num_nodes, int source, int sink, std::vector<Arc> arcs) {
  if (num_nodes < 2) throw std::invalid_argument("cut graph needs at least two nodes");
  check_node(source, num_nodes, "source");
  check_node(sink, num_nodes, "sink");
  if (source == sink) throw std::invalid_argument("source and sink must differ");
  if (arcs.empty()) throw std::invalid_argument("cut graph needs at least one arc");
  for (const Arc& a : arcs) {
    check_node(a.tail, num_nodes, "arc tail");
    check_node(a.head, num_nodes, "arc head");
    if (a.tail == a.head) throw std::invalid_argument("self-loop arc not allowed");
  }
  // without source-to-sink connectivity the empty set would cut, and empty
  // solutions have no bottleneck cost
  if (!reachable(num_nodes, source, sink, arcs))
    throw std::invalid_argument("cut graph must connect source to sink");
  return ProblemFamily(FamilyKind::st_cut, Digraph{num_nodes, source, sink, std::move(arcs)});
}

ProblemFamily ProblemFamily::assignment(int side, std::vector<BipartiteEdge> edges) {
  if (side < 1) throw std::invalid_argument("assignment needs at least one node per side");
  if (edges.empty()) throw std::invalid_argument("assignment graph needs at least one edge");
  for (const BipartiteEdge& e : edges) {
    check_node(e.left, side, "left");
    check_node(e.right, side, "right");
  }
  return ProblemFamily(FamilyKind::assignment, Bipartite{side, std::move(edges)});
}

int ProblemFamily::num_elements() const {
  switch (kind_) {
    case FamilyKind::selection: return as_selection().n;
    case FamilyKind::path:
    case FamilyKind::st_cut: return static_cast<int>(as_digraph().arcs.size());
    case FamilyKind::spanning_tree: return static_cast<int>(as_graph().edges.size());
    case FamilyKind::assignment: return static_cast<int>(as_bipartite().edges.size());
  }
  throw std::logic_error("unknown family kind");
}

const ProblemFamily::Selection& ProblemFamily::as_selection() const {
  if (const auto* s = std::get_if<Selection>(&data_)) return *s;
  throw std::logic_error("family is not a selection");
}

const ProblemFamily::Digraph& ProblemFamily::as_digraph() const {
  if (const auto* d = std::get_if<Digraph>(&data_)) return *d;
  throw std::logic_error("family is not a digraph");
}

const ProblemFamily::Graph& ProblemFamily::as_graph() const {
  if (const auto* g = std::get_if<Graph>(&data_)) return *g;
  throw std::logic_error("family is not an undirected graph");
}

const ProblemFamily::Bipartite& ProblemFamily::as_bipartite() const {
  if (const auto* b = std::get_if<Bipartite>(&data_)) return *b;
  throw std::logic_error("family is not bipartite");
}

int ProblemFamily::selection_size() const { return as_selection().p; }

int ProblemFamily::num_nodes() const {
  switch (kind_) {
    case FamilyKind::path:
    case FamilyKind::st_cut: return as_digraph().num_nodes;
    case FamilyKind::spanning_tree: return as_graph().num_nodes;
    default: throw std::logic_error("family has no node count");
  }
}

int ProblemFamily::source() const { return as_digraph().source; }
int ProblemFamily::sink() const { return as_digraph().sink; }
int ProblemFamily::side() const { return as_bipartite().side; }
const std::vector<Arc>& ProblemFamily::arcs() const { return as_digraph().arcs; }
const std::vector<Edge>& ProblemFamily::edges() const { return as_graph().edges; }
const std::vector<BipartiteEdge>& ProblemFamily::bipartite_edges() const {
  return as_bipartite().edges;
}

}  // namespace owabp
