#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hamfree/graph.hpp"
#include "hamfree/invariants.hpp"

namespace hamfree {

/// True when s induces exactly one edge plus k isolated vertices.
inline bool induces_edge_plus_isolated(const Graph& g, const VertexSet& s, int k) {
  if (s.count() != k + 2) return false;
  int edges = 0;
  for (int u = s.first(); u >= 0; u = s.next(u)) edges += (g.neighbors(u) & s).count();
  return edges == 2;  // each edge counted from both ends
}

struct PatternResult {
  bool value = false;
  VertexSet witness;  // {u, v} union the k isolated vertices, when value
};

/// Does g contain one edge plus k pairwise non-adjacent vertices avoiding the
/// edge's closed neighborhoods, as an induced subgraph? Edges are scanned in
/// lexicographic order and the residual independence number comes from the
/// exact solver, so witnesses are deterministic.
inline PatternResult contains_induced_pattern(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("contains_induced_pattern: k must be >= 1");
  PatternResult out;
  out.witness = VertexSet(g.order());
  if (g.order() < k + 2) return out;
  for (auto [u, v] : g.edge_list()) {
    VertexSet residual = VertexSet::full(g.order());
    residual -= g.closed_neighborhood(u);
    residual -= g.closed_neighborhood(v);
    if (residual.count() < k) continue;
    auto sub = induced_subgraph(g, residual);
    AlphaResult alpha = independence_number(sub.graph);
    if (alpha.value < k) continue;
    VertexSet witness(g.order());
    witness.set(u);
    witness.set(v);
    int taken = 0;
    for (int w = alpha.witness.first(); w >= 0 && taken < k; w = alpha.witness.next(w), ++taken)
      witness.set(sub.old_of_new[w]);
    if (!induces_edge_plus_isolated(g, witness, k))
      throw std::logic_error("contains_induced_pattern: malformed witness");
    out.value = true;
    out.witness = witness;
    return out;
  }
  return out;
}

struct FreenessThreshold {
  int value = 1;  // smallest k >= 1 with the graph (K2 u kK1)-free
};

inline FreenessThreshold freeness_threshold(const Graph& g) {
  // Upward closure: once free for k, free for every larger k.
  for (int k = 1;; ++k) {
    if (!contains_induced_pattern(g, k).value) return {k};
    if (k > g.order() + 1) throw std::logic_error("freeness_threshold: no bound found");
  }
}

inline bool is_pattern_free(const Graph& g, int k) {
  return !contains_induced_pattern(g, k).value;
}

struct NeighborDichotomy {
  VertexSet no_neighbors;    // N(v) and X disjoint
  VertexSet many_neighbors;  // |N(v) cap X| >= |X| - k + 1
};

/// Every vertex of a free graph sees an independent X either not at all or in
/// at least |X|-k+1 vertices. A vertex strictly between would contradict
/// freeness, so this doubles as a cross-check of the recognizer.
inline NeighborDichotomy neighbor_dichotomy(const Graph& g, const VertexSet& x, int k) {
  if (!is_independent_set(g, x)) throw std::invalid_argument("neighbor_dichotomy: X not independent");
  if (!is_pattern_free(g, k))
    throw std::invalid_argument("neighbor_dichotomy: graph not free for this k");
  NeighborDichotomy out{VertexSet(g.order()), VertexSet(g.order())};
  int bound = x.count() - k + 1;
  for (int v = 0; v < g.order(); ++v) {
    int cnt = (g.neighbors(v) & x).count();
    if (cnt == 0)
      out.no_neighbors.set(v);
    else if (cnt >= bound)
      out.many_neighbors.set(v);
    else
      throw std::logic_error("neighbor_dichotomy: vertex " + std::to_string(v) +
                             " violates the dichotomy despite verified freeness");
  }
  return out;
}

/// If every w in W has at most |X|-k neighbors in the independent set X of a
/// free graph, X and W together are independent.
inline bool low_degree_extension(const Graph& g, const VertexSet& x, const VertexSet& w, int k) {
  if (!is_independent_set(g, x))
    throw std::invalid_argument("low_degree_extension: X not independent");
  int cap = x.count() - k;
  for (int v = w.first(); v >= 0; v = w.next(v))
    if ((g.neighbors(v) & x).count() > cap)
      throw std::invalid_argument("low_degree_extension: vertex " + std::to_string(v) +
                                  " has more than |X|-k neighbors in X");
  if (!is_pattern_free(g, k))
    throw std::invalid_argument("low_degree_extension: graph not free for this k");
  VertexSet both = x;
  both |= w;
  if (!is_independent_set(g, both))
    throw std::logic_error("low_degree_extension: X u W dependent despite verified freeness");
  return true;
}

}  // namespace hamfree
