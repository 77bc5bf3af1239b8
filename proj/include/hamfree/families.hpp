#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "hamfree/graph.hpp"
#include "hamfree/isomorphism.hpp"

namespace hamfree::families {

/// Kneser graph on the 2-subsets of {1..5} in lexicographic order:
/// vertex 0 = {1,2}, 1 = {1,3}, ..., 9 = {4,5}; adjacency by disjointness.
inline Graph petersen() { return hamfree::detail::petersen_reference(); }

inline Graph complete(int n) {
  if (n < 1) throw std::invalid_argument("complete: n must be >= 1");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: n must be >= 3");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

inline Graph path(int n) {
  if (n < 1) throw std::invalid_argument("path: n must be >= 1");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

/// K_{m,n}: side A = 0..m-1, side B = m..m+n-1.
inline Graph complete_bipartite(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("complete_bipartite: zero part size");
  Graph g(m + n);
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < n; ++v) g.add_edge(u, m + v);
  return g;
}

/// One edge plus k isolated vertices: vertices 0,1 joined, 2..k+1 isolated.
inline Graph pattern(int k) {
  if (k < 1) throw std::invalid_argument("pattern: k must be >= 1");
  Graph g(k + 2);
  g.add_edge(0, 1);
  return g;
}

/// The extremal family: three (l+1)-cliques whose distinguished vertices form
/// a triangle, k-3 extra l-cliques, and an independent set Y of size k-2
/// joined completely to everything else. Vertex numbering is fixed: the three
/// big blocks first (hub vertex first in each), then the small blocks, then Y.
struct GFamily {
  Graph graph;
  std::array<int, 3> hubs{};              // the triangle x1, x2, x3
  std::vector<std::vector<int>> blocks;   // 3 blocks of size l+1, then k-3 of size l
  std::vector<int> apex;                  // Y, joined to all of X, independent
};

inline GFamily g_family(int k, int l) {
  if (k < 4) throw std::invalid_argument("g_family: k must be >= 4");
  if (l < 1) throw std::invalid_argument("g_family: l must be >= 1");
  int n = k * l + k + 1;
  GFamily out;
  Graph g(n);
  int next = 0;
  for (int i = 0; i < 3; ++i) {
    std::vector<int> block;
    for (int j = 0; j <= l; ++j) block.push_back(next++);
    for (std::size_t a = 0; a < block.size(); ++a)
      for (std::size_t b = a + 1; b < block.size(); ++b) g.add_edge(block[a], block[b]);
    out.hubs[i] = block[0];
    out.blocks.push_back(std::move(block));
  }
  g.add_edge(out.hubs[0], out.hubs[1]);
  g.add_edge(out.hubs[1], out.hubs[2]);
  g.add_edge(out.hubs[2], out.hubs[0]);
  for (int i = 0; i < k - 3; ++i) {
    std::vector<int> block;
    for (int j = 0; j < l; ++j) block.push_back(next++);
    for (std::size_t a = 0; a < block.size(); ++a)
      for (std::size_t b = a + 1; b < block.size(); ++b) g.add_edge(block[a], block[b]);
    out.blocks.push_back(std::move(block));
  }
  int x_size = next;
  for (int i = 0; i < k - 2; ++i) out.apex.push_back(next++);
  if (next != n) throw std::logic_error("g_family: vertex count mismatch");
  for (int y : out.apex)
    for (int v = 0; v < x_size; ++v) g.add_edge(v, y);
  out.graph = std::move(g);
  return out;
}

enum class BasicFamily { Complete, Cycle, Path };

inline Graph basic(BasicFamily f, int n) {
  switch (f) {
    case BasicFamily::Complete:
      return complete(n);
    case BasicFamily::Cycle:
      return cycle(n);
    case BasicFamily::Path:
      return path(n);
  }
  throw std::invalid_argument("basic: unknown family");
}

}  // namespace hamfree::families
