#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hamfree/cycle.hpp"
#include "hamfree/graph.hpp"
#include "hamfree/rational.hpp"

namespace hamfree {

inline int min_degree(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("min_degree: empty graph");
  int best = g.degree(0);
  for (int v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

inline int component_count(const Graph& g, const VertexSet& removed) {
  return static_cast<int>(components_after_removal(g, removed).size());
}

// ---------------------------------------------------------------------------
// Vertex connectivity: maximum vertex-disjoint paths between non-adjacent
// pairs (vertex-split unit-capacity flow), n-1 for complete graphs.
// ---------------------------------------------------------------------------

namespace detail {

inline int vertex_disjoint_paths(const Graph& g, int s, int t) {
  // split nodes: in(v)=2v, out(v)=2v+1; caps in a dense matrix (small n)
  int n = g.order();
  int N = 2 * n;
  std::vector<std::vector<int>> cap(N, std::vector<int>(N, 0));
  for (int v = 0; v < n; ++v) cap[2 * v][2 * v + 1] = (v == s || v == t) ? n : 1;
  for (auto [u, v] : g.edge_list()) {
    cap[2 * u + 1][2 * v] = 1;
    cap[2 * v + 1][2 * u] = 1;
  }
  int source = 2 * s + 1, sink = 2 * t;
  int flow = 0;
  while (true) {
    std::vector<int> prev(N, -1);
    std::vector<int> queue{source};
    prev[source] = source;
    for (std::size_t qi = 0; qi < queue.size() && prev[sink] < 0; ++qi) {
      int u = queue[qi];
      for (int w = 0; w < N; ++w)
        if (prev[w] < 0 && cap[u][w] > 0) {
          prev[w] = u;
          queue.push_back(w);
        }
    }
    if (prev[sink] < 0) break;
    for (int w = sink; w != source; w = prev[w]) {
      cap[prev[w]][w] -= 1;
      cap[w][prev[w]] += 1;
    }
    ++flow;
  }
  return flow;
}

}  // namespace detail

inline int vertex_connectivity(const Graph& g) {
  int n = g.order();
  if (n == 0) throw std::invalid_argument("vertex_connectivity: empty graph");
  if (is_complete(g)) return n - 1;
  int best = n - 1;
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t)
      if (!g.has_edge(s, t)) best = std::min(best, detail::vertex_disjoint_paths(g, s, t));
  return best;
}

// ---------------------------------------------------------------------------
// Independence number: branch and bound on the highest-degree candidate with
// a greedy clique-cover upper bound.
// ---------------------------------------------------------------------------

struct AlphaResult {
  int value = 0;
  VertexSet witness;
};

namespace detail {

inline int clique_cover_bound(const Graph& g, const VertexSet& pool) {
  std::vector<VertexSet> cliques;
  for (int v = pool.first(); v >= 0; v = pool.next(v)) {
    bool placed = false;
    for (auto& c : cliques)
      if (c.is_subset_of(g.neighbors(v))) {
        c.set(v);
        placed = true;
        break;
      }
    if (!placed) {
      VertexSet c(g.order());
      c.set(v);
      cliques.push_back(std::move(c));
    }
  }
  return static_cast<int>(cliques.size());
}

inline void alpha_search(const Graph& g, VertexSet pool, VertexSet current, int current_size,
                         AlphaResult& best) {
  if (current_size > best.value) {
    best.value = current_size;
    best.witness = current;
  }
  if (pool.empty()) return;
  if (current_size + clique_cover_bound(g, pool) <= best.value) return;
  // branch on the candidate with most neighbors inside the pool
  int pick = -1, pick_deg = -1;
  for (int v = pool.first(); v >= 0; v = pool.next(v)) {
    int d = (g.neighbors(v) & pool).count();
    if (d > pick_deg) {
      pick = v;
      pick_deg = d;
    }
  }
  VertexSet with = pool;
  with.reset(pick);
  with -= g.neighbors(pick);
  VertexSet cur_with = current;
  cur_with.set(pick);
  alpha_search(g, with, cur_with, current_size + 1, best);
  VertexSet without = pool;
  without.reset(pick);
  alpha_search(g, without, current, current_size, best);
}

}  // namespace detail

inline AlphaResult independence_number(const Graph& g) {
  AlphaResult best;
  best.witness = VertexSet(g.order());
  detail::alpha_search(g, VertexSet::full(g.order()), VertexSet(g.order()), 0, best);
  return best;
}

// ---------------------------------------------------------------------------
// Toughness: exact minimum of |S| / omega(G-S) over cuts with omega >= 2.
// Infinite for complete graphs, 0 for disconnected ones.
// ---------------------------------------------------------------------------

struct Toughness {
  bool infinite = false;
  Rational value;  // meaningful only when !infinite
  VertexSet cut;   // achieves the value; omega(G - cut) >= 2 when !infinite

  std::string str() const { return infinite ? "inf" : value.str(); }
};

namespace detail {

template <typename Fn>
inline void for_each_subset_of_size(int n, int size, Fn&& fn) {
  if (n > 62) throw std::invalid_argument("subset enumeration beyond 62 vertices");
  if (size == 0) {
    fn(0ULL);
    return;
  }
  if (size > n) return;
  std::uint64_t mask = (1ULL << size) - 1;
  std::uint64_t limit = 1ULL << n;
  while (mask < limit) {
    fn(mask);
    std::uint64_t c = mask & -mask, r = mask + c;  // Gosper's hack
    mask = (((r ^ mask) >> 2) / c) | r;
    if (!r) break;
  }
}

inline VertexSet set_from_mask(int n, std::uint64_t mask) {
  VertexSet s(n);
  while (mask) {
    int v = std::countr_zero(mask);
    mask &= mask - 1;
    s.set(v);
  }
  return s;
}

}  // namespace detail

inline Toughness toughness(const Graph& g) {
  int n = g.order();
  Toughness out;
  out.cut = VertexSet(n);
  if (is_complete(g)) {
    out.infinite = true;
    return out;
  }
  if (!is_connected(g)) {
    out.value = Rational(0, 1);  // S = empty already separates
    return out;
  }
  std::optional<Rational> best;
  VertexSet best_cut(n);
  for (int s = 1; s <= n - 2; ++s) {
    if (best && Rational(s, n - s) >= *best) break;  // omega <= n - s
    detail::for_each_subset_of_size(n, s, [&](std::uint64_t mask) {
      if (best && Rational(s, n - s) >= *best) return;
      VertexSet cut = detail::set_from_mask(n, mask);
      int omega = component_count(g, cut);
      if (omega < 2) return;
      Rational r(s, omega);
      if (!best || r < *best) {
        best = r;
        best_cut = cut;
      }
    });
  }
  if (!best) throw std::logic_error("toughness: no separating cut in a non-complete graph");
  out.value = *best;
  out.cut = best_cut;
  return out;
}

/// t-toughness decided by the cut condition t*omega(G-S) <= |S|, stopping at
/// the first violating cut instead of computing full toughness.
inline bool is_t_tough(const Graph& g, const Rational& t) {
  if (t < Rational(0, 1)) throw std::invalid_argument("is_t_tough: negative t");
  if (is_complete(g)) return true;
  if (t == Rational(0, 1)) return true;
  int n = g.order();
  for (int s = 0; s <= n - 2; ++s) {
    // even the largest possible omega cannot violate once t*(n-s) <= s
    if (t.num * (n - s) <= t.den * s) break;
    bool violated = false;
    detail::for_each_subset_of_size(n, s, [&](std::uint64_t mask) {
      if (violated) return;
      VertexSet cut = detail::set_from_mask(n, mask);
      int omega = component_count(g, cut);
      if (omega >= 2 && t.num * omega > t.den * s) violated = true;
    });
    if (violated) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Hamiltonicity and longest cycles/paths. Bitmask DP over (subset, endpoint)
// up to dp_cutoff vertices, exact backtracking beyond.
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> adj(g.order(), 0);
  for (auto [u, v] : g.edge_list()) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  return adj;
}

/// reach[S] = endpoint mask of simple paths that start at `start` and visit
/// exactly S. Only entries with S containing start are meaningful.
inline std::vector<std::uint32_t> path_dp(const Graph& g, int start) {
  int n = g.order();
  auto adj = adjacency_masks(g);
  std::vector<std::uint32_t> reach(std::size_t(1) << n, 0);
  reach[1u << start] = 1u << start;
  std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  for (std::uint32_t S = 1; S <= full; ++S) {
    std::uint32_t ends = reach[S];
    if (!ends) continue;
    while (ends) {
      int v = std::countr_zero(ends);
      ends &= ends - 1;
      std::uint32_t ext = adj[v] & ~S;
      while (ext) {
        int w = std::countr_zero(ext);
        ext &= ext - 1;
        reach[S | (1u << w)] |= 1u << w;
      }
    }
  }
  return reach;
}

inline std::vector<int> reconstruct_path(const Graph& g, const std::vector<std::uint32_t>& reach,
                                         int start, std::uint32_t S, int v) {
  auto adj = adjacency_masks(g);
  std::vector<int> rev;
  while (true) {
    rev.push_back(v);
    S &= ~(1u << v);
    if (!S) break;
    std::uint32_t prevs = reach[S] & adj[v];
    if (!prevs) throw std::logic_error("reconstruct_path: broken DP table");
    v = std::countr_zero(prevs);
  }
  if (rev.back() != start) throw std::logic_error("reconstruct_path: did not reach start");
  std::reverse(rev.begin(), rev.end());
  return rev;
}

/// Anchored DP for longest cycles: paths start at the minimum vertex of S and
/// only extend upward, so every cycle is found once, rooted at its minimum.
struct CycleDP {
  std::vector<std::uint32_t> reach;
  int best_len = 0;
  std::uint32_t best_set = 0;
  int best_end = -1;
};

inline CycleDP cycle_dp(const Graph& g) {
  int n = g.order();
  auto adj = adjacency_masks(g);
  CycleDP out;
  out.reach.assign(std::size_t(1) << n, 0);
  for (int v = 0; v < n; ++v) out.reach[1u << v] = 1u << v;
  std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t S = 1; S <= full && S; ++S) {
    std::uint32_t ends = out.reach[S];
    if (!ends) continue;
    int anchor = std::countr_zero(S);
    int size = std::popcount(S);
    if (size >= 3) {
      std::uint32_t closing = ends & adj[anchor] & ~(1u << anchor);
      if (closing && size > out.best_len) {
        out.best_len = size;
        out.best_set = S;
        out.best_end = std::countr_zero(closing);
      }
    }
    std::uint32_t allowed = ~((anchor == 31) ? ~0u : ((1u << (anchor + 1)) - 1));
    while (ends) {
      int v = std::countr_zero(ends);
      ends &= ends - 1;
      std::uint32_t ext = adj[v] & ~S & allowed;
      while (ext) {
        int w = std::countr_zero(ext);
        ext &= ext - 1;
        out.reach[S | (1u << w)] |= 1u << w;
      }
    }
  }
  return out;
}

// --- exact backtracking fallbacks for graphs beyond the DP cutoff ---

struct LongestSearch {
  const Graph* g;
  std::vector<int> path;
  VertexSet on_path;
  std::vector<int> best;
  int target_end = -1;  // -1: free end (cycle/any)
  bool cycle_mode = false;

  int reachable_bound() const {
    // vertices reachable from the current endpoint avoiding the path interior
    VertexSet seen = on_path;
    std::vector<int> stack{path.back()};
    int extra = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      VertexSet nb = g->neighbors(v) - seen;
      for (int w = nb.first(); w >= 0; w = nb.next(w)) {
        seen.set(w);
        ++extra;
        stack.push_back(w);
      }
    }
    return extra;
  }

  void run() {
    if (cycle_mode) {
      int start = path.front();
      if (static_cast<int>(path.size()) >= 3 && g->has_edge(path.back(), start) &&
          static_cast<int>(path.size()) > static_cast<int>(best.size()))
        best = path;
    } else if (target_end < 0 || path.back() == target_end) {
      if (static_cast<int>(path.size()) > static_cast<int>(best.size())) best = path;
    }
    if (static_cast<int>(path.size()) + reachable_bound() <= static_cast<int>(best.size())) return;
    int v = path.back();
    VertexSet nb = g->neighbors(v) - on_path;
    for (int w = nb.first(); w >= 0; w = nb.next(w)) {
      if (cycle_mode && w < path.front()) continue;  // root cycles at their minimum vertex
      path.push_back(w);
      on_path.set(w);
      run();
      on_path.reset(w);
      path.pop_back();
    }
  }
};

inline std::vector<int> longest_cycle_backtracking(const Graph& g) {
  LongestSearch s;
  s.g = &g;
  s.cycle_mode = true;
  std::vector<int> best;
  for (int v = 0; v < g.order(); ++v) {
    s.path = {v};
    s.on_path = VertexSet(g.order());
    s.on_path.set(v);
    s.best = best;
    s.run();
    best = s.best;
  }
  return best;
}

inline std::vector<int> longest_ab_path_backtracking(const Graph& g, int a, int b) {
  LongestSearch s;
  s.g = &g;
  s.target_end = b;
  s.path = {a};
  s.on_path = VertexSet(g.order());
  s.on_path.set(a);
  s.run();
  return s.best;
}

}  // namespace detail

constexpr int kDefaultDpCutoff = 22;

/// Spanning cycle when one exists, otherwise nullopt. Exact.
inline std::optional<OrientedCycle> hamiltonian_cycle(const Graph& g,
                                                      int dp_cutoff = kDefaultDpCutoff) {
  int n = g.order();
  if (n < 3) throw std::invalid_argument("hamiltonian_cycle: fewer than 3 vertices");
  if (!is_connected(g) || min_degree(g) < 2) return std::nullopt;
  if (n <= dp_cutoff && n <= 31) {
    auto reach = detail::path_dp(g, 0);
    std::uint32_t full = (1u << n) - 1;
    std::uint32_t closing = reach[full] & detail::adjacency_masks(g)[0] & ~1u;
    if (!closing) return std::nullopt;
    auto seq = detail::reconstruct_path(g, reach, 0, full, std::countr_zero(closing));
    return OrientedCycle(g, seq);
  }
  auto best = detail::longest_cycle_backtracking(g);
  if (static_cast<int>(best.size()) == n) return OrientedCycle(g, best);
  return std::nullopt;
}

inline bool is_hamiltonian(const Graph& g, int dp_cutoff = kDefaultDpCutoff) {
  if (g.order() < 3) return false;
  return hamiltonian_cycle(g, dp_cutoff).has_value();
}

/// Spanning a-b path or nullopt. Exact.
inline std::optional<OrientedPath> hamiltonian_ab_path(const Graph& g, int a, int b,
                                                       int dp_cutoff = kDefaultDpCutoff) {
  int n = g.order();
  if (a == b) throw std::invalid_argument("hamiltonian_ab_path: equal endpoints");
  if (a < 0 || b < 0 || a >= n || b >= n)
    throw std::invalid_argument("hamiltonian_ab_path: endpoint out of range");
  if (n <= dp_cutoff && n <= 31) {
    auto reach = detail::path_dp(g, a);
    std::uint32_t full = (1u << n) - 1;
    if (!(reach[full] & (1u << b))) return std::nullopt;
    return OrientedPath(g, detail::reconstruct_path(g, reach, a, full, b));
  }
  auto best = detail::longest_ab_path_backtracking(g, a, b);
  if (static_cast<int>(best.size()) == n) return OrientedPath(g, best);
  return std::nullopt;
}

struct HamiltonianConnectedResult {
  bool value = true;
  std::pair<int, int> failing_pair{-1, -1};
};

inline HamiltonianConnectedResult is_hamiltonian_connected(const Graph& g,
                                                           int dp_cutoff = kDefaultDpCutoff) {
  int n = g.order();
  if (n < 2) throw std::invalid_argument("is_hamiltonian_connected: fewer than 2 vertices");
  for (int a = 0; a + 1 < n; ++a) {
    if (n <= dp_cutoff && n <= 31) {
      auto reach = detail::path_dp(g, a);
      std::uint32_t full = (1u << n) - 1;
      for (int b = a + 1; b < n; ++b)
        if (!(reach[full] & (1u << b))) return {false, {a, b}};
    } else {
      for (int b = a + 1; b < n; ++b)
        if (!hamiltonian_ab_path(g, a, b, dp_cutoff)) return {false, {a, b}};
    }
  }
  return {};
}

/// A maximum-length cycle, or nullopt for forests. Exact.
inline std::optional<OrientedCycle> longest_cycle(const Graph& g,
                                                  int dp_cutoff = kDefaultDpCutoff) {
  int n = g.order();
  if (n < 3) return std::nullopt;
  if (n <= dp_cutoff && n <= 31) {
    auto dp = detail::cycle_dp(g);
    if (dp.best_len < 3) return std::nullopt;
    int anchor = std::countr_zero(dp.best_set);
    auto seq = detail::reconstruct_path(g, dp.reach, anchor, dp.best_set, dp.best_end);
    return OrientedCycle(g, seq);
  }
  auto best = detail::longest_cycle_backtracking(g);
  if (static_cast<int>(best.size()) >= 3) return OrientedCycle(g, best);
  return std::nullopt;
}

/// Maximum-length a-b path. Requires a and b connected.
inline OrientedPath longest_ab_path(const Graph& g, int a, int b,
                                    int dp_cutoff = kDefaultDpCutoff) {
  int n = g.order();
  if (a == b) throw std::invalid_argument("longest_ab_path: equal endpoints");
  if (a < 0 || b < 0 || a >= n || b >= n)
    throw std::invalid_argument("longest_ab_path: endpoint out of range");
  if (n <= dp_cutoff && n <= 31) {
    auto reach = detail::path_dp(g, a);
    std::uint32_t best_set = 0;
    int best_size = 0;
    std::uint32_t full = (1u << n) - 1;
    for (std::uint32_t S = 1; S <= full && S; ++S) {
      if (!(reach[S] & (1u << b))) continue;
      int size = std::popcount(S);
      if (size > best_size) {
        best_size = size;
        best_set = S;
      }
    }
    if (!best_size) throw std::invalid_argument("longest_ab_path: endpoints not connected");
    return OrientedPath(g, detail::reconstruct_path(g, reach, a, best_set, b));
  }
  auto best = detail::longest_ab_path_backtracking(g, a, b);
  if (best.empty() || best.back() != b)
    throw std::invalid_argument("longest_ab_path: endpoints not connected");
  return OrientedPath(g, best);
}

}  // namespace hamfree
