#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hamfree/bitset.hpp"

namespace hamfree {

/// Simple undirected graph on vertices 0..n-1 with per-vertex adjacency bitsets.
/// Treated as immutable once built: all algorithms take const references and
/// never mutate shared instances.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(n, VertexSet(n)) {
    if (n < 0) throw std::invalid_argument("Graph: negative order");
  }

  int order() const { return n_; }
  int size() const { return m_; }

  bool has_edge(int u, int v) const {
    check(u);
    check(v);
    return u != v && adj_[u].test(v);
  }

  void add_edge(int u, int v) {
    check(u);
    check(v);
    if (u == v) throw std::invalid_argument("Graph: self-loop rejected");
    if (adj_[u].test(v)) return;  // duplicate pair collapses
    adj_[u].set(v);
    adj_[v].set(u);
    ++m_;
  }

  const VertexSet& neighbors(int v) const {
    check(v);
    return adj_[v];
  }
  int degree(int v) const { return neighbors(v).count(); }

  VertexSet closed_neighborhood(int v) const {
    VertexSet s = neighbors(v);
    s.set(v);
    return s;
  }

  VertexSet vertices() const { return VertexSet::full(n_); }

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edge_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
      for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v)) out.emplace_back(u, v);
    return out;
  }

  bool operator==(const Graph& o) const = default;

 private:
  void check(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
  }

  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;
};

inline Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("from_edge_list: endpoint out of range");
    if (u == v) throw std::invalid_argument("from_edge_list: self-loop");
    g.add_edge(u, v);
  }
  return g;
}

inline Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
  return from_edge_list(n, std::span<const std::pair<int, int>>(edges));
}

/// Disjoint union; the second operand's indices are shifted by g.order().
inline Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph r(g.order() + h.order());
  for (auto [u, v] : g.edge_list()) r.add_edge(u, v);
  for (auto [u, v] : h.edge_list()) r.add_edge(u + g.order(), v + g.order());
  return r;
}

/// g plus every edge between A and B. A and B must be disjoint subsets of V(g).
inline Graph join_all(const Graph& g, const VertexSet& a, const VertexSet& b) {
  if (a.universe() != g.order() || b.universe() != g.order())
    throw std::invalid_argument("join_all: set universe mismatch");
  if (a.intersects(b)) throw std::invalid_argument("join_all: overlapping sides");
  Graph r = g;
  for (int u = a.first(); u >= 0; u = a.next(u))
    for (int v = b.first(); v >= 0; v = b.next(v)) r.add_edge(u, v);
  return r;
}

struct InducedSubgraph {
  Graph graph;
  std::vector<int> old_of_new;  // new index -> original vertex
  std::vector<int> new_of_old;  // original vertex -> new index, -1 if absent
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order())
    throw std::invalid_argument("induced_subgraph: set universe mismatch");
  InducedSubgraph out;
  out.old_of_new = s.to_vector();
  out.new_of_old.assign(g.order(), -1);
  for (std::size_t i = 0; i < out.old_of_new.size(); ++i)
    out.new_of_old[out.old_of_new[i]] = static_cast<int>(i);
  Graph h(static_cast<int>(out.old_of_new.size()));
  for (std::size_t i = 0; i < out.old_of_new.size(); ++i) {
    VertexSet nb = g.neighbors(out.old_of_new[i]) & s;
    for (int v = nb.first(); v >= 0; v = nb.next(v)) {
      int j = out.new_of_old[v];
      if (static_cast<int>(i) < j) h.add_edge(static_cast<int>(i), j);
    }
  }
  out.graph = std::move(h);
  return out;
}

inline bool is_independent_set(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order())
    throw std::invalid_argument("is_independent_set: set universe mismatch");
  for (int v = s.first(); v >= 0; v = s.next(v))
    if (g.neighbors(v).intersects(s)) return false;
  return true;
}

/// N_G(S): vertices outside S with a neighbor in S.
inline VertexSet neighborhood_of_set(const Graph& g, const VertexSet& s) {
  VertexSet r(g.order());
  for (int v = s.first(); v >= 0; v = s.next(v)) r |= g.neighbors(v);
  r -= s;
  return r;
}

inline bool is_complete(const Graph& g) {
  return 2 * g.size() == g.order() * (g.order() - 1);
}

/// Connected components of g - removed, as vertex sets over V(g).
inline std::vector<VertexSet> components_after_removal(const Graph& g, const VertexSet& removed) {
  if (removed.universe() != g.order())
    throw std::invalid_argument("components_after_removal: set universe mismatch");
  std::vector<VertexSet> comps;
  VertexSet todo = removed.complement();
  while (!todo.empty()) {
    int start = todo.first();
    VertexSet comp(g.order());
    std::vector<int> stack{start};
    comp.set(start);
    todo.reset(start);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      VertexSet nb = g.neighbors(v) & todo;
      for (int w = nb.first(); w >= 0; w = nb.next(w)) {
        comp.set(w);
        todo.reset(w);
        stack.push_back(w);
      }
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

inline std::vector<VertexSet> components(const Graph& g) {
  return components_after_removal(g, VertexSet(g.order()));
}

inline bool is_connected(const Graph& g) {
  return g.order() <= 1 || components(g).size() == 1;
}

}  // namespace hamfree
