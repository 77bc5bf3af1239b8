#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hamfree/graph.hpp"

namespace hamfree {

namespace detail {

using Partition = std::vector<std::vector<int>>;

/// Equitable refinement: split cells by neighbor counts into other cells
/// until stable. Sub-cells are ordered by count, which keeps the procedure
/// isomorphism-invariant.
inline void refine_partition(const Graph& g, Partition& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t si = 0; si < cells.size() && !changed; ++si) {
      VertexSet splitter = VertexSet::from(g.order(), cells[si]);
      for (std::size_t ci = 0; ci < cells.size(); ++ci) {
        if (cells[ci].size() <= 1) continue;
        std::map<int, std::vector<int>> by_count;
        for (int v : cells[ci]) by_count[(g.neighbors(v) & splitter).count()].push_back(v);
        if (by_count.size() <= 1) continue;
        Partition replacement;
        for (auto& [cnt, vs] : by_count) replacement.push_back(std::move(vs));
        cells.erase(cells.begin() + ci);
        cells.insert(cells.begin() + ci, replacement.begin(), replacement.end());
        changed = true;
        break;
      }
    }
  }
}

inline Partition initial_partition(const Graph& g) {
  std::map<int, std::vector<int>> by_degree;
  for (int v = 0; v < g.order(); ++v) by_degree[g.degree(v)].push_back(v);
  Partition cells;
  for (auto& [d, vs] : by_degree) cells.push_back(std::move(vs));
  refine_partition(g, cells);
  return cells;
}

/// Adjacency bytes of g relabeled by perm (canonical position -> original
/// vertex): order byte, then the upper triangle row-major, packed 8 per byte.
inline std::string adjacency_bytes(const Graph& g, const std::vector<int>& perm) {
  int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(n));
  int acc = 0, nbits = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      acc = (acc << 1) | (g.has_edge(perm[i], perm[j]) ? 1 : 0);
      if (++nbits == 8) {
        out.push_back(static_cast<char>(acc));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits) out.push_back(static_cast<char>(acc << (8 - nbits)));
  return out;
}

struct CanonState {
  const Graph* g = nullptr;
  std::string best;
  std::vector<int> best_perm;
  bool have = false;
};

inline void canon_search(CanonState& st, Partition& cells) {
  // first smallest non-singleton cell is the branching target
  int target = -1;
  std::size_t best_size = 0;
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i].size() > 1 && (target < 0 || cells[i].size() < best_size)) {
      target = static_cast<int>(i);
      best_size = cells[i].size();
    }
  if (target < 0) {
    std::vector<int> perm;
    perm.reserve(st.g->order());
    for (auto& c : cells) perm.push_back(c[0]);
    std::string bytes = adjacency_bytes(*st.g, perm);
    if (!st.have || bytes < st.best) {
      st.best = std::move(bytes);
      st.best_perm = std::move(perm);
      st.have = true;
    }
    return;
  }
  std::vector<int> options = cells[target];
  std::sort(options.begin(), options.end());
  for (int v : options) {
    Partition next = cells;
    std::vector<int> rest;
    for (int w : cells[target])
      if (w != v) rest.push_back(w);
    next[target] = {v};
    next.insert(next.begin() + target + 1, std::move(rest));
    refine_partition(*st.g, next);
    canon_search(st, next);
  }
}

}  // namespace detail

struct CanonicalLabeling {
  std::string bytes;           // canonical form; equal bytes <=> isomorphic
  std::vector<int> positions;  // original vertex -> canonical position
};

inline CanonicalLabeling canonical_labeling(const Graph& g) {
  detail::CanonState st;
  st.g = &g;
  if (g.order() == 0) {
    st.best = std::string(1, '\0');
    st.have = true;
  } else {
    detail::Partition cells = detail::initial_partition(g);
    detail::canon_search(st, cells);
  }
  CanonicalLabeling out;
  out.bytes = st.best;
  out.positions.assign(g.order(), -1);
  for (std::size_t p = 0; p < st.best_perm.size(); ++p) out.positions[st.best_perm[p]] = static_cast<int>(p);
  return out;
}

/// Canonical byte string: equal strings exactly when the graphs are
/// isomorphic; stable across runs.
inline std::string canonical_form(const Graph& g) { return canonical_labeling(g).bytes; }

namespace detail {

/// Plain backtracking isomorphism search, independent of canonical labeling.
inline bool extend_isomorphism(const Graph& g, const Graph& h, std::vector<int>& order,
                               std::size_t idx, std::vector<int>& map, std::vector<bool>& used) {
  if (idx == order.size()) return true;
  int u = order[idx];
  for (int cand = 0; cand < h.order(); ++cand) {
    if (used[cand] || h.degree(cand) != g.degree(u)) continue;
    bool ok = true;
    for (std::size_t j = 0; j < idx && ok; ++j) {
      int w = order[j];
      if (g.has_edge(u, w) != h.has_edge(cand, map[w])) ok = false;
    }
    if (!ok) continue;
    map[u] = cand;
    used[cand] = true;
    if (extend_isomorphism(g, h, order, idx + 1, map, used)) return true;
    used[cand] = false;
    map[u] = -1;
  }
  return false;
}

}  // namespace detail

/// Edge-preserving bijection g -> h if one exists. Implemented as direct
/// backtracking so it can cross-check canonical_form in tests.
inline std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  std::vector<int> dg, dh;
  for (int v = 0; v < g.order(); ++v) dg.push_back(g.degree(v));
  for (int v = 0; v < h.order(); ++v) dh.push_back(h.degree(v));
  {
    auto a = dg, b = dh;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  std::vector<int> order(g.order());
  for (int v = 0; v < g.order(); ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (dg[a] != dg[b]) return dg[a] > dg[b];
    return a < b;
  });
  std::vector<int> map(g.order(), -1);
  std::vector<bool> used(g.order(), false);
  if (detail::extend_isomorphism(g, h, order, 0, map, used)) return map;
  return std::nullopt;
}

inline bool are_isomorphic(const Graph& g, const Graph& h) {
  return find_isomorphism(g, h).has_value();
}

/// Length of a shortest cycle, or -1 for forests. BFS from every vertex.
inline int girth(const Graph& g) {
  int best = -1;
  for (int s = 0; s < g.order(); ++s) {
    std::vector<int> depth(g.order(), -1), parent(g.order(), -1);
    std::vector<int> queue{s};
    depth[s] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      const VertexSet& nb = g.neighbors(u);
      for (int w = nb.first(); w >= 0; w = nb.next(w)) {
        if (depth[w] < 0) {
          depth[w] = depth[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          int len = depth[u] + depth[w] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

namespace detail {

/// Kneser graph on the 2-subsets of {1..5}, adjacency by disjointness.
inline Graph petersen_reference() {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 1; a <= 5; ++a)
    for (int b = a + 1; b <= 5; ++b) pairs.emplace_back(a, b);
  Graph g(10);
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j) {
      auto [a1, b1] = pairs[i];
      auto [a2, b2] = pairs[j];
      if (a1 != a2 && a1 != b2 && b1 != a2 && b1 != b2) g.add_edge(i, j);
    }
  return g;
}

}  // namespace detail

/// The unique 3-regular girth-5 graph on 10 vertices. The cage
/// characterization is the fast path; debug builds cross-check it against an
/// explicit isomorphism test.
inline bool is_petersen(const Graph& g) {
  bool structural = g.order() == 10 && g.size() == 15 && girth(g) == 5;
  if (structural)
    for (int v = 0; v < 10 && structural; ++v) structural = g.degree(v) == 3;
#ifndef NDEBUG
  bool by_iso = g.order() == 10 && are_isomorphic(g, detail::petersen_reference());
  if (by_iso != structural)
    throw std::logic_error("is_petersen: cage characterization disagrees with isomorphism test");
#endif
  return structural;
}

}  // namespace hamfree
