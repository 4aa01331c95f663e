#pragma once

#include <string>
#include <variant>
#include <vector>

#include "owabp/model.hpp"

namespace owabp {

enum class FamilyKind { selection, path, spanning_tree, st_cut, assignment };

std::string family_kind_name(FamilyKind kind);
FamilyKind family_kind_from_name(const std::string& name);

struct Arc {
  int tail;
  int head;
  friend bool operator==(const Arc&, const Arc&) = default;
};

struct Edge {
  int a;
  int b;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct BipartiteEdge {
  int left;
  int right;
  friend bool operator==(const BipartiteEdge&, const BipartiteEdge&) = default;
};

/// One of five concrete problem structures. Element id i maps to the i-th
/// arc/edge (graph families) or simply to index i (selection). Structural
/// validity is checked once at construction; oracles never re-validate.
class ProblemFamily {
 public:
  /// All subsets of {0..n-1} of size exactly p.
  static ProblemFamily selection(int n, int p);
  /// Arc sets of simple source-sink paths in a directed multigraph.
  static ProblemFamily path(int num_nodes, int source, int sink, std::vector<Arc> arcs);
  /// Spanning trees of an undirected multigraph (self-loops rejected).
  static ProblemFamily spanning_tree(int num_nodes, std::vector<Edge> edges);
  /// Cut-sets delta(S) over node bipartitions with source in S, sink outside.
  /// Requires the sink reachable from the source so every cut-set is nonempty.
  static ProblemFamily st_cut(int num_nodes, int source, int sink, std::vector<Arc> arcs);
  /// Perfect matchings of a balanced bipartite multigraph with `side` nodes
  /// per side.
  static ProblemFamily assignment(int side, std::vector<BipartiteEdge> edges);

  FamilyKind kind() const { return kind_; }
  int num_elements() const;

  // structure accessors; calling one that does not match kind() throws
  int selection_size() const;                       // p
  int num_nodes() const;                            // graph families
  int source() const;                               // path, st_cut
  int sink() const;                                 // path, st_cut
  int side() const;                                 // assignment
  const std::vector<Arc>& arcs() const;             // path, st_cut
  const std::vector<Edge>& edges() const;           // spanning_tree
  const std::vector<BipartiteEdge>& bipartite_edges() const;  // assignment

  friend bool operator==(const ProblemFamily&, const ProblemFamily&) = default;

 private:
  struct Selection {
    int n;
    int p;
    friend bool operator==(const Selection&, const Selection&) = default;
  };
  struct Digraph {  // path and st_cut share the shape
    int num_nodes;
    int source;
    int sink;
    std::vector<Arc> arcs;
    friend bool operator==(const Digraph&, const Digraph&) = default;
  };
  struct Graph {
    int num_nodes;
    std::vector<Edge> edges;
    friend bool operator==(const Graph&, const Graph&) = default;
  };
  struct Bipartite {
    int side;
    std::vector<BipartiteEdge> edges;
    friend bool operator==(const Bipartite&, const Bipartite&) = default;
  };

  ProblemFamily(FamilyKind kind, std::variant<Selection, Digraph, Graph, Bipartite> data)
      : kind_(kind), data_(std::move(data)) {}

  const Selection& as_selection() const;
  const Digraph& as_digraph() const;
  const Graph& as_graph() const;
  const Bipartite& as_bipartite() const;

  FamilyKind kind_;
  std::variant<Selection, Digraph, Graph, Bipartite> data_;
};

}  // namespace owabp
