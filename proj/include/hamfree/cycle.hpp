#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hamfree/graph.hpp"

namespace hamfree {

/// Cycle of a host graph with a fixed orientation. Vertices are distinct and
/// consecutive ones (cyclically) are adjacent in the host; checked on build.
class OrientedCycle {
 public:
  OrientedCycle() = default;
  OrientedCycle(const Graph& g, std::vector<int> seq) : seq_(std::move(seq)) {
    if (seq_.size() < 3) throw std::invalid_argument("OrientedCycle: length < 3");
    index_into(g.order());
    for (std::size_t i = 0; i < seq_.size(); ++i) {
      int u = seq_[i], v = seq_[(i + 1) % seq_.size()];
      if (!g.has_edge(u, v))
        throw std::invalid_argument("OrientedCycle: non-edge between consecutive vertices " +
                                    std::to_string(u) + " " + std::to_string(v));
    }
  }

  int length() const { return static_cast<int>(seq_.size()); }
  const std::vector<int>& vertices() const { return seq_; }
  bool contains(int v) const { return v >= 0 && v < static_cast<int>(pos_.size()) && pos_[v] >= 0; }
  int position(int v) const {
    require(v);
    return pos_[v];
  }

  int successor(int v, int h = 1) const { return at(position(v) + h); }
  int predecessor(int v, int h = 1) const { return at(position(v) - h); }

  /// u ->C v: the vertices from u to v along the orientation, inclusive.
  std::vector<int> forward_arc(int u, int v) const {
    require(u);
    require(v);
    std::vector<int> out;
    for (int p = pos_[u];; p = (p + 1) % length()) {
      out.push_back(seq_[p]);
      if (seq_[p] == v) break;
    }
    return out;
  }
  /// u <-C v: the vertices from u back to v against the orientation, inclusive.
  std::vector<int> backward_arc(int u, int v) const {
    require(u);
    require(v);
    std::vector<int> out;
    for (int p = pos_[u];; p = (p + length() - 1) % length()) {
      out.push_back(seq_[p]);
      if (seq_[p] == v) break;
    }
    return out;
  }

  VertexSet vertex_set(int universe) const { return VertexSet::from(universe, seq_); }

  VertexSet successors(const VertexSet& in) const { return shift(in, +1); }
  VertexSet predecessors(const VertexSet& in) const { return shift(in, -1); }

  OrientedCycle reversed(const Graph& g) const {
    std::vector<int> r(seq_.rbegin(), seq_.rend());
    return OrientedCycle(g, std::move(r));
  }

 private:
  void index_into(int n) {
    pos_.assign(n, -1);
    for (std::size_t i = 0; i < seq_.size(); ++i) {
      int v = seq_[i];
      if (v < 0 || v >= n) throw std::invalid_argument("OrientedCycle: vertex out of range");
      if (pos_[v] >= 0) throw std::invalid_argument("OrientedCycle: repeated vertex");
      pos_[v] = static_cast<int>(i);
    }
  }
  void require(int v) const {
    if (!contains(v)) throw std::invalid_argument("OrientedCycle: vertex not on cycle");
  }
  int at(int p) const {
    int L = length();
    return seq_[((p % L) + L) % L];
  }
  VertexSet shift(const VertexSet& in, int dir) const {
    VertexSet out(in.universe());
    for (int v = in.first(); v >= 0; v = in.next(v))
      out.set(dir > 0 ? successor(v) : predecessor(v));
    return out;
  }

  std::vector<int> seq_;
  std::vector<int> pos_;
};

/// Path of a host graph, oriented from its first endpoint a to its last b.
/// successor(b) and predecessor(a) do not exist and are reported as -1.
class OrientedPath {
 public:
  OrientedPath() = default;
  OrientedPath(const Graph& g, std::vector<int> seq) : seq_(std::move(seq)) {
    if (seq_.size() < 2) throw std::invalid_argument("OrientedPath: length < 2");
    pos_.assign(g.order(), -1);
    for (std::size_t i = 0; i < seq_.size(); ++i) {
      int v = seq_[i];
      if (v < 0 || v >= g.order()) throw std::invalid_argument("OrientedPath: vertex out of range");
      if (pos_[v] >= 0) throw std::invalid_argument("OrientedPath: repeated vertex");
      pos_[v] = static_cast<int>(i);
    }
    for (std::size_t i = 0; i + 1 < seq_.size(); ++i)
      if (!g.has_edge(seq_[i], seq_[i + 1]))
        throw std::invalid_argument("OrientedPath: non-edge between consecutive vertices");
  }

  int length() const { return static_cast<int>(seq_.size()); }
  const std::vector<int>& vertices() const { return seq_; }
  int a() const { return seq_.front(); }
  int b() const { return seq_.back(); }
  bool contains(int v) const { return v >= 0 && v < static_cast<int>(pos_.size()) && pos_[v] >= 0; }
  int position(int v) const {
    require(v);
    return pos_[v];
  }

  int successor(int v, int h = 1) const {
    int p = position(v) + h;
    return p >= length() || p < 0 ? -1 : seq_[p];
  }
  int predecessor(int v, int h = 1) const { return successor(v, -h); }

  /// x P y: the subpath between two of its vertices, oriented x -> y.
  std::vector<int> subpath(int x, int y) const {
    int px = position(x), py = position(y);
    std::vector<int> out;
    int step = px <= py ? 1 : -1;
    for (int p = px;; p += step) {
      out.push_back(seq_[p]);
      if (p == py) break;
    }
    return out;
  }

  VertexSet vertex_set(int universe) const { return VertexSet::from(universe, seq_); }

  /// I+ / I-; vertices whose successor (predecessor) does not exist drop out.
  VertexSet successors(const VertexSet& in) const { return shift(in, +1); }
  VertexSet predecessors(const VertexSet& in) const { return shift(in, -1); }

  OrientedPath reversed(const Graph& g) const {
    std::vector<int> r(seq_.rbegin(), seq_.rend());
    return OrientedPath(g, std::move(r));
  }

 private:
  void require(int v) const {
    if (!contains(v)) throw std::invalid_argument("OrientedPath: vertex not on path");
  }
  VertexSet shift(const VertexSet& in, int dir) const {
    VertexSet out(in.universe());
    for (int v = in.first(); v >= 0; v = in.next(v)) {
      int w = dir > 0 ? successor(v) : predecessor(v);
      if (w >= 0) out.set(w);
    }
    return out;
  }

  std::vector<int> seq_;
  std::vector<int> pos_;
};

/// An a-b path closed by the virtual edge ab into a cycle. The virtual edge
/// need not exist in the host graph; traversal gives b+ = a and a- = b.
class AugmentedCycle {
 public:
  AugmentedCycle() = default;
  AugmentedCycle(const Graph& g, OrientedPath path) : path_(std::move(path)) {
    virtual_is_real_ = g.has_edge(path_.a(), path_.b());
  }

  const OrientedPath& path() const { return path_; }
  int a() const { return path_.a(); }
  int b() const { return path_.b(); }
  int length() const { return path_.length(); }
  const std::vector<int>& vertices() const { return path_.vertices(); }
  bool contains(int v) const { return path_.contains(v); }
  int position(int v) const { return path_.position(v); }

  /// True when the host graph happens to contain ab as a real edge; the pair
  /// is still treated as the virtual edge by all traversal bookkeeping.
  bool virtual_edge_is_real() const { return virtual_is_real_; }

  int successor(int v, int h = 1) const { return at(position(v) + h); }
  int predecessor(int v, int h = 1) const { return at(position(v) - h); }

  /// The step from position p to p+1 crosses the virtual edge exactly when it
  /// wraps from b back to a.
  bool step_is_virtual(int u, int v) const {
    return (u == b() && v == a()) || (u == a() && v == b());
  }

  VertexSet vertex_set(int universe) const { return path_.vertex_set(universe); }

 private:
  int at(int p) const {
    int L = length();
    return path_.vertices()[((p % L) + L) % L];
  }

  OrientedPath path_;
  bool virtual_is_real_ = false;
};

}  // namespace hamfree
