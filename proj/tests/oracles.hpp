#pragma once

// Brute-force oracles for the test suite. These deliberately avoid the
// library's solver paths: plain subset scans, permutation searches and DFS
// enumeration, so they can disagree with the solvers when something breaks.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hamfree/graph.hpp"
#include "hamfree/rational.hpp"

namespace oracles {

using hamfree::Graph;
using hamfree::Rational;
using hamfree::VertexSet;

inline int alpha_brute(const Graph& g) {
  int n = g.order(), best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      if ((mask >> u) & 1)
        for (int v = u + 1; v < n && ok; ++v)
          if (((mask >> v) & 1) && g.has_edge(u, v)) ok = false;
    if (ok) best = std::max(best, std::popcount(mask));
  }
  return best;
}

inline bool independent_brute(const Graph& g, const std::vector<int>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.has_edge(vs[i], vs[j])) return false;
  return true;
}

inline bool hamiltonian_cycle_brute(const Graph& g) {
  int n = g.order();
  if (n < 3) return false;
  std::vector<int> perm(n - 1);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    bool ok = g.has_edge(0, perm.front()) && g.has_edge(perm.back(), 0);
    for (std::size_t i = 0; i + 1 < perm.size() && ok; ++i)
      ok = g.has_edge(perm[i], perm[i + 1]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline bool hamiltonian_ab_path_brute(const Graph& g, int a, int b) {
  int n = g.order();
  std::vector<int> middle;
  for (int v = 0; v < n; ++v)
    if (v != a && v != b) middle.push_back(v);
  if (n == 2) return g.has_edge(a, b);
  std::sort(middle.begin(), middle.end());
  do {
    bool ok = g.has_edge(a, middle.front()) && g.has_edge(middle.back(), b);
    for (std::size_t i = 0; i + 1 < middle.size() && ok; ++i)
      ok = g.has_edge(middle[i], middle[i + 1]);
    if (ok) return true;
  } while (std::next_permutation(middle.begin(), middle.end()));
  return false;
}

namespace detail {

inline void cycle_dfs(const Graph& g, std::vector<int>& path, std::vector<bool>& used,
                      int& best, int* count, int target_len) {
  int v = path.back(), root = path.front();
  if (static_cast<int>(path.size()) >= 3 && g.has_edge(v, root)) {
    best = std::max(best, static_cast<int>(path.size()));
    if (count && static_cast<int>(path.size()) == target_len) ++*count;
  }
  const VertexSet& nb = g.neighbors(v);
  for (int w = nb.first(); w >= 0; w = nb.next(w)) {
    if (w <= root || used[w]) continue;  // root cycles at their minimum vertex
    used[w] = true;
    path.push_back(w);
    cycle_dfs(g, path, used, best, count, target_len);
    path.pop_back();
    used[w] = false;
  }
}

}  // namespace detail

/// Length of a longest cycle by exhaustive DFS enumeration; 0 if acyclic.
inline int longest_cycle_brute(const Graph& g) {
  int best = 0;
  std::vector<bool> used(g.order(), false);
  for (int root = 0; root < g.order(); ++root) {
    std::vector<int> path{root};
    used[root] = true;
    detail::cycle_dfs(g, path, used, best, nullptr, -1);
    used[root] = false;
  }
  return best;
}

inline int count_cycles_of_length(const Graph& g, int len) {
  int best = 0, count = 0;
  std::vector<bool> used(g.order(), false);
  for (int root = 0; root < g.order(); ++root) {
    std::vector<int> path{root};
    used[root] = true;
    detail::cycle_dfs(g, path, used, best, &count, len);
    used[root] = false;
  }
  return count / 2;  // each cycle traversed in both directions
}

/// All cycles of one length, as vertex sequences rooted at their minimum
/// vertex; both traversal directions appear, callers dedup if they care.
inline std::vector<std::vector<int>> cycles_of_length(const Graph& g, int len) {
  std::vector<std::vector<int>> out;
  std::vector<bool> used(g.order(), false);
  std::vector<int> path;
  auto dfs = [&](auto&& self, int root) -> void {
    int v = path.back();
    if (static_cast<int>(path.size()) == len) {
      if (g.has_edge(v, root)) out.push_back(path);
      return;
    }
    const VertexSet& nb = g.neighbors(v);
    for (int w = nb.first(); w >= 0; w = nb.next(w)) {
      if (w <= root || used[w]) continue;
      used[w] = true;
      path.push_back(w);
      self(self, root);
      path.pop_back();
      used[w] = false;
    }
  };
  for (int root = 0; root < g.order(); ++root) {
    path = {root};
    used[root] = true;
    dfs(dfs, root);
    used[root] = false;
  }
  return out;
}

inline int longest_ab_path_brute(const Graph& g, int a, int b) {
  int best = 0;
  std::vector<bool> used(g.order(), false);
  std::vector<int> path{a};
  used[a] = true;
  auto dfs = [&](auto&& self) -> void {
    int v = path.back();
    if (v == b) {
      best = std::max(best, static_cast<int>(path.size()));
      return;
    }
    const VertexSet& nb = g.neighbors(v);
    for (int w = nb.first(); w >= 0; w = nb.next(w)) {
      if (used[w]) continue;
      used[w] = true;
      path.push_back(w);
      self(self);
      path.pop_back();
      used[w] = false;
    }
  };
  dfs(dfs);
  return best;
}

/// Toughness by a full unpruned subset scan; nullopt encodes infinity.
inline std::optional<Rational> toughness_brute(const Graph& g) {
  int n = g.order();
  std::optional<Rational> best;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    VertexSet cut(n);
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1) cut.set(v);
    int omega = static_cast<int>(hamfree::components_after_removal(g, cut).size());
    if (omega < 2) continue;
    Rational r(std::popcount(mask), omega);
    if (!best || r < *best) best = r;
  }
  return best;
}

inline int connectivity_brute(const Graph& g) {
  int n = g.order();
  for (int s = 0; s < n; ++s) {
    bool separating = false;
    for (std::uint32_t mask = 0; mask < (1u << n) && !separating; ++mask) {
      if (std::popcount(mask) != s) continue;
      VertexSet cut(n);
      for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1) cut.set(v);
      if (hamfree::components_after_removal(g, cut).size() >= 2) separating = true;
    }
    if (separating) return s;
  }
  return n - 1;
}

/// Induced K2 u kK1 by scanning all (k+2)-subsets: exactly one induced edge.
inline bool contains_pattern_brute(const Graph& g, int k) {
  int n = g.order(), size = k + 2;
  if (size > n) return false;
  std::vector<int> idx(size);
  auto scan = [&](auto&& self, int pos, int from) -> bool {
    if (pos == size) {
      int edges = 0;
      for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j)
          if (g.has_edge(idx[i], idx[j])) ++edges;
      return edges == 1;
    }
    for (int v = from; v < n; ++v) {
      idx[pos] = v;
      if (self(self, pos + 1, v + 1)) return true;
    }
    return false;
  };
  return scan(scan, 0, 0);
}

inline long long automorphism_count(const Graph& g) {
  int n = g.order();
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  long long count = 0;
  auto rec = [&](auto&& self, int u) -> void {
    if (u == n) {
      ++count;
      return;
    }
    for (int c = 0; c < n; ++c) {
      if (used[c] || g.degree(c) != g.degree(u)) continue;
      bool ok = true;
      for (int w = 0; w < u && ok; ++w)
        if (g.has_edge(u, w) != g.has_edge(c, map[w])) ok = false;
      if (!ok) continue;
      map[u] = c;
      used[c] = true;
      self(self, u + 1);
      used[c] = false;
      map[u] = -1;
    }
  };
  rec(rec, 0);
  return count;
}

/// Isomorphism-class count by labeled enumeration plus dedup under the
/// minimum-over-permutations adjacency string.
inline long long count_classes_labeled(int n) {
  std::vector<std::vector<int>> perms;
  {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  }
  int bits = n * (n - 1) / 2;
  std::set<std::vector<char>> classes;
  for (std::uint64_t mask = 0; mask < (1ULL << bits); ++mask) {
    auto bit_of = [&](int u, int v, const std::vector<int>& p) {
      int a = std::min(p[u], p[v]), b = std::max(p[u], p[v]);
      int index = b * (b - 1) / 2 + a;  // column-major upper triangle
      return static_cast<char>((mask >> index) & 1);
    };
    std::vector<char> best;
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    for (const auto& p : perms) {
      std::vector<char> cur;
      cur.reserve(bits);
      for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) cur.push_back(bit_of(u, v, p));
      if (best.empty() || cur < best) best = cur;
    }
    classes.insert(best);
  }
  return static_cast<long long>(classes.size());
}

}  // namespace oracles
