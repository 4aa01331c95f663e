#include "owabp/feasibility.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

#include "owabp/errors.hpp"

namespace owabp {

RestrictedSet RestrictedSet::of(int num_elements, const std::vector<ElementId>& ids) {
  RestrictedSet set = none(num_elements);
  for (ElementId e : ids) {
    if (e < 0 || e >= num_elements)
      throw std::invalid_argument("restricted set id out of range");
    set.allowed[e] = 1;
  }
  return set;
}

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

// out-arc ids per node, ascending because arcs are scanned in id order
std::vector<std::vector<int>> out_arcs(int num_nodes, const std::vector<Arc>& arcs,
                                       const RestrictedSet* allowed) {
  std::vector<std::vector<int>> out(num_nodes);
  for (int id = 0; id < static_cast<int>(arcs.size()); ++id)
    if (!allowed || allowed->contains(id)) out[arcs[id].tail].push_back(id);
  return out;
}

std::optional<Solution> feasible_selection(const ProblemFamily& fam,
                                           const RestrictedSet& allowed) {
  std::vector<ElementId> picked;
  const int p = fam.selection_size();
  for (int e = 0; e < fam.num_elements() && static_cast<int>(picked.size()) < p; ++e)
    if (allowed.contains(e)) picked.push_back(e);
  if (static_cast<int>(picked.size()) < p) return std::nullopt;
  return Solution(std::move(picked));
}

std::optional<Solution> feasible_path(const ProblemFamily& fam, const RestrictedSet& allowed) {
  const auto out = out_arcs(fam.num_nodes(), fam.arcs(), &allowed);
  std::vector<int> parent_arc(fam.num_nodes(), -1);
  std::vector<char> seen(fam.num_nodes(), 0);
  std::deque<int> queue{fam.source()};
  seen[fam.source()] = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int id : out[u]) {
      const int v = fam.arcs()[id].head;
      if (seen[v]) continue;
      seen[v] = 1;
      parent_arc[v] = id;
      queue.push_back(v);
    }
  }
  if (!seen[fam.sink()]) return std::nullopt;
  std::vector<ElementId> path;
  for (int v = fam.sink(); v != fam.source();) {
    const int id = parent_arc[v];
    path.push_back(id);
    v = fam.arcs()[id].tail;
  }
  return Solution(std::move(path));
}

std::optional<Solution> feasible_spanning_tree(const ProblemFamily& fam,
                                               const RestrictedSet& allowed) {
  DisjointSets dsu(fam.num_nodes());
  std::vector<ElementId> tree;
  for (int id = 0; id < fam.num_elements(); ++id) {
    if (!allowed.contains(id)) continue;
    const Edge& e = fam.edges()[id];
    if (dsu.unite(e.a, e.b)) tree.push_back(id);
  }
  if (static_cast<int>(tree.size()) != fam.num_nodes() - 1) return std::nullopt;
  return Solution(std::move(tree));
}

// Any valid side S must be closed under arcs the cut-set may not contain:
// a forbidden arc leaving S would land in the cut-set. The closure of
// {source} under forbidden arcs is the minimal such S, so it decides
// feasibility.
std::optional<Solution> feasible_cut(const ProblemFamily& fam, const RestrictedSet& allowed) {
  std::vector<char> side(fam.num_nodes(), 0);
  side[fam.source()] = 1;
  std::vector<int> stack{fam.source()};
  const auto& arcs = fam.arcs();
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int id = 0; id < static_cast<int>(arcs.size()); ++id) {
      if (allowed.contains(id)) continue;
      if (arcs[id].tail == u && !side[arcs[id].head]) {
        side[arcs[id].head] = 1;
        stack.push_back(arcs[id].head);
      }
    }
  }
  if (side[fam.sink()]) return std::nullopt;
  std::vector<ElementId> cut;
  for (int id = 0; id < static_cast<int>(arcs.size()); ++id)
    if (side[arcs[id].tail] && !side[arcs[id].head]) cut.push_back(id);
  // family construction guarantees sink reachable from source, so the
  // crossing set cannot be empty
  return Solution(std::move(cut));
}

struct MatchingState {
  const ProblemFamily& fam;
  const RestrictedSet& allowed;
  std::vector<std::vector<int>> left_edges;  // edge ids per left node, ascending
  std::vector<int> matched_edge_of_right;    // -1 when free
  std::vector<char> visited_right;

  bool augment(int left) {
    for (int id : left_edges[left]) {
      if (!allowed.contains(id)) continue;
      const int r = fam.bipartite_edges()[id].right;
      if (visited_right[r]) continue;
      visited_right[r] = 1;
      const int other = matched_edge_of_right[r];
      if (other == -1 || augment(fam.bipartite_edges()[other].left)) {
        matched_edge_of_right[r] = id;
        return true;
      }
    }
    return false;
  }
};

std::optional<Solution> feasible_assignment(const ProblemFamily& fam,
                                            const RestrictedSet& allowed) {
  const int side = fam.side();
  MatchingState state{fam, allowed, std::vector<std::vector<int>>(side),
                      std::vector<int>(side, -1), {}};
  for (int id = 0; id < fam.num_elements(); ++id)
    state.left_edges[fam.bipartite_edges()[id].left].push_back(id);
  for (int l = 0; l < side; ++l) {
    state.visited_right.assign(side, 0);
    if (!state.augment(l)) return std::nullopt;
  }
  std::vector<ElementId> matching;
  for (int r = 0; r < side; ++r) matching.push_back(state.matched_edge_of_right[r]);
  return Solution(std::move(matching));
}

}  // namespace

std::optional<Solution> find_feasible(const ProblemFamily& fam, const RestrictedSet& allowed) {
  if (allowed.size() != fam.num_elements())
    throw std::invalid_argument("restricted set size does not match element count");
  switch (fam.kind()) {
    case FamilyKind::selection: return feasible_selection(fam, allowed);
    case FamilyKind::path: return feasible_path(fam, allowed);
    case FamilyKind::spanning_tree: return feasible_spanning_tree(fam, allowed);
    case FamilyKind::st_cut: return feasible_cut(fam, allowed);
    case FamilyKind::assignment: return feasible_assignment(fam, allowed);
  }
  throw std::logic_error("unknown family kind");
}

namespace {

void check_budget(long long count, long long budget) {
  if (count > budget)
    throw BudgetExceededError("search space too large: more than " + std::to_string(budget) +
                                  " feasible solutions",
                              count);
}

std::vector<Solution> all_selections(const ProblemFamily& fam, long long budget) {
  const int n = fam.num_elements();
  const int p = fam.selection_size();
  std::vector<Solution> out;
  std::vector<ElementId> current(p);
  for (int i = 0; i < p; ++i) current[i] = i;
  while (true) {
    check_budget(static_cast<long long>(out.size()) + 1, budget);
    out.push_back(Solution(current));
    int i = p - 1;
    while (i >= 0 && current[i] == n - p + i) --i;
    if (i < 0) break;
    ++current[i];
    for (int j = i + 1; j < p; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

std::vector<Solution> all_paths(const ProblemFamily& fam, long long budget) {
  const auto out_by_node = out_arcs(fam.num_nodes(), fam.arcs(), nullptr);
  std::vector<Solution> out;
  std::vector<char> on_path(fam.num_nodes(), 0);
  std::vector<ElementId> stack;
  long long count = 0;

  auto dfs = [&](auto&& self, int u) -> void {
    if (u == fam.sink()) {
      check_budget(++count, budget);
      out.push_back(Solution(stack));
      return;
    }
    on_path[u] = 1;
    for (int id : out_by_node[u]) {
      const int v = fam.arcs()[id].head;
      if (on_path[v]) continue;
      stack.push_back(id);
      self(self, v);
      stack.pop_back();
    }
    on_path[u] = 0;
  };
  dfs(dfs, fam.source());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Solution> all_spanning_trees(const ProblemFamily& fam, long long budget) {
  const int num_nodes = fam.num_nodes();
  const int n = fam.num_elements();
  std::vector<Solution> out;
  std::vector<ElementId> chosen;
  long long count = 0;

  // include/exclude per edge in id order; each tree is reached exactly once
  auto recurse = [&](auto&& self, int next_edge, const DisjointSets& dsu, int joined) -> void {
    if (joined == num_nodes - 1) {
      check_budget(++count, budget);
      out.push_back(Solution(chosen));
      return;
    }
    if (next_edge >= n) return;
    if (joined + (n - next_edge) < num_nodes - 1) return;  // not enough edges left
    const Edge& e = fam.edges()[next_edge];
    DisjointSets with = dsu;
    if (with.unite(e.a, e.b)) {
      chosen.push_back(next_edge);
      self(self, next_edge + 1, with, joined + 1);
      chosen.pop_back();
    }
    self(self, next_edge + 1, dsu, joined);
  };
  recurse(recurse, 0, DisjointSets(num_nodes), 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Solution> all_cuts(const ProblemFamily& fam, long long budget) {
  const int num_nodes = fam.num_nodes();
  std::vector<int> free_nodes;
  for (int v = 0; v < num_nodes; ++v)
    if (v != fam.source() && v != fam.sink()) free_nodes.push_back(v);
  if (free_nodes.size() > 20) {
    const long long bipartitions =
        free_nodes.size() < 62 ? (1LL << free_nodes.size()) : std::numeric_limits<long long>::max();
    throw BudgetExceededError("search space too large: 2^" +
                                  std::to_string(free_nodes.size()) + " node bipartitions",
                              bipartitions);
  }
  std::vector<std::vector<ElementId>> cuts;
  const auto& arcs = fam.arcs();
  for (std::uint64_t bits = 0; bits < (1ULL << free_nodes.size()); ++bits) {
    std::vector<char> side(num_nodes, 0);
    side[fam.source()] = 1;
    for (std::size_t i = 0; i < free_nodes.size(); ++i)
      if (bits & (1ULL << i)) side[free_nodes[i]] = 1;
    std::vector<ElementId> cut;
    for (int id = 0; id < static_cast<int>(arcs.size()); ++id)
      if (side[arcs[id].tail] && !side[arcs[id].head]) cut.push_back(id);
    cuts.push_back(std::move(cut));
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<Solution> out;
  for (auto& cut : cuts) {
    check_budget(static_cast<long long>(out.size()) + 1, budget);
    out.push_back(Solution(std::move(cut)));
  }
  return out;
}

std::vector<Solution> all_assignments(const ProblemFamily& fam, long long budget) {
  const int side = fam.side();
  std::vector<std::vector<int>> left_edges(side);
  for (int id = 0; id < fam.num_elements(); ++id)
    left_edges[fam.bipartite_edges()[id].left].push_back(id);
  std::vector<Solution> out;
  std::vector<char> right_used(side, 0);
  std::vector<ElementId> chosen;
  long long count = 0;

  auto recurse = [&](auto&& self, int left) -> void {
    if (left == side) {
      check_budget(++count, budget);
      out.push_back(Solution(chosen));
      return;
    }
    for (int id : left_edges[left]) {
      const int r = fam.bipartite_edges()[id].right;
      if (right_used[r]) continue;
      right_used[r] = 1;
      chosen.push_back(id);
      self(self, left + 1);
      chosen.pop_back();
      right_used[r] = 0;
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Solution> enumerate_all(const ProblemFamily& fam, long long budget) {
  if (budget <= 0) throw std::invalid_argument("enumeration budget must be positive");
  switch (fam.kind()) {
    case FamilyKind::selection: return all_selections(fam, budget);
    case FamilyKind::path: return all_paths(fam, budget);
    case FamilyKind::spanning_tree: return all_spanning_trees(fam, budget);
    case FamilyKind::st_cut: return all_cuts(fam, budget);
    case FamilyKind::assignment: return all_assignments(fam, budget);
  }
  throw std::logic_error("unknown family kind");
}

namespace {

bool valid_id_set(const ProblemFamily& fam, std::vector<ElementId> ids,
                  std::vector<ElementId>& sorted_out) {
  if (ids.empty()) return false;
  std::sort(ids.begin(), ids.end());
  if (ids.front() < 0 || ids.back() >= fam.num_elements()) return false;
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) return false;
  sorted_out = std::move(ids);
  return true;
}

bool member_path(const ProblemFamily& fam, const std::vector<ElementId>& ids) {
  // a simple path gives every node at most one outgoing chosen arc; walking
  // from the source must consume every chosen arc and stop exactly at the sink
  std::vector<int> out_arc(fam.num_nodes(), -1);
  for (int id : ids) {
    const Arc& a = fam.arcs()[id];
    if (out_arc[a.tail] != -1) return false;
    out_arc[a.tail] = id;
  }
  std::vector<char> visited(fam.num_nodes(), 0);
  int u = fam.source();
  std::size_t used = 0;
  while (out_arc[u] != -1) {
    if (visited[u]) return false;
    visited[u] = 1;
    u = fam.arcs()[out_arc[u]].head;
    ++used;
  }
  return u == fam.sink() && used == ids.size();
}

bool member_spanning_tree(const ProblemFamily& fam, const std::vector<ElementId>& ids) {
  if (static_cast<int>(ids.size()) != fam.num_nodes() - 1) return false;
  DisjointSets dsu(fam.num_nodes());
  for (int id : ids) {
    const Edge& e = fam.edges()[id];
    if (!dsu.unite(e.a, e.b)) return false;  // cycle
  }
  return true;  // n-1 acyclic edges span
}

// X equals delta(S) for some bipartition iff the tails of X together with the
// source can be closed under all non-X arcs without touching the sink or any
// head of X.
bool member_cut(const ProblemFamily& fam, const std::vector<ElementId>& ids) {
  const auto& arcs = fam.arcs();
  std::vector<char> in_cut(arcs.size(), 0);
  for (int id : ids) in_cut[id] = 1;
  std::vector<char> side(fam.num_nodes(), 0);
  std::vector<int> stack;
  auto mark = [&](int v) {
    if (!side[v]) {
      side[v] = 1;
      stack.push_back(v);
    }
  };
  mark(fam.source());
  for (int id : ids) mark(arcs[id].tail);
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int id = 0; id < static_cast<int>(arcs.size()); ++id)
      if (!in_cut[id] && arcs[id].tail == u) mark(arcs[id].head);
  }
  if (side[fam.sink()]) return false;
  for (int id : ids)
    if (side[arcs[id].head]) return false;
  return true;
}

bool member_assignment(const ProblemFamily& fam, const std::vector<ElementId>& ids) {
  if (static_cast<int>(ids.size()) != fam.side()) return false;
  std::vector<char> left_used(fam.side(), 0), right_used(fam.side(), 0);
  for (int id : ids) {
    const BipartiteEdge& e = fam.bipartite_edges()[id];
    if (left_used[e.left] || right_used[e.right]) return false;
    left_used[e.left] = 1;
    right_used[e.right] = 1;
  }
  return true;
}

}  // namespace

bool is_member(const ProblemFamily& fam, const std::vector<ElementId>& elements) {
  std::vector<ElementId> ids;
  if (!valid_id_set(fam, elements, ids)) return false;
  switch (fam.kind()) {
    case FamilyKind::selection:
      return static_cast<int>(ids.size()) == fam.selection_size();
    case FamilyKind::path: return member_path(fam, ids);
    case FamilyKind::spanning_tree: return member_spanning_tree(fam, ids);
    case FamilyKind::st_cut: return member_cut(fam, ids);
    case FamilyKind::assignment: return member_assignment(fam, ids);
  }
  throw std::logic_error("unknown family kind");
}

}  // namespace owabp
