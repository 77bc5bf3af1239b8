#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace hamfree {

/// Set of vertex indices over a fixed universe 0..n-1, packed 64 per word.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe)
      : n_(universe), words_((universe + 63) / 64, 0) {
    if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (std::size_t i = 0; i < s.words_.size(); ++i) s.words_[i] = ~0ULL;
    s.trim();
    return s;
  }
  static VertexSet of(int universe, std::initializer_list<int> vs) {
    VertexSet s(universe);
    for (int v : vs) s.set(v);
    return s;
  }
  template <typename It>
  static VertexSet from(int universe, It begin, It end) {
    VertexSet s(universe);
    for (It it = begin; it != end; ++it) s.set(*it);
    return s;
  }
  static VertexSet from(int universe, const std::vector<int>& vs) {
    return from(universe, vs.begin(), vs.end());
  }

  int universe() const { return n_; }

  bool test(int v) const {
    check(v);
    return (words_[v >> 6] >> (v & 63)) & 1ULL;
  }
  void set(int v) {
    check(v);
    words_[v >> 6] |= 1ULL << (v & 63);
  }
  void reset(int v) {
    check(v);
    words_[v >> 6] &= ~(1ULL << (v & 63));
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool intersects(const VertexSet& o) const {
    same(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    same(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  VertexSet& operator|=(const VertexSet& o) {
    same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const {
    VertexSet r = full(n_);
    r -= *this;
    return r;
  }

  bool operator==(const VertexSet& o) const = default;

  // Iteration: for (int v = s.first(); v >= 0; v = s.next(v)) ...
  int first() const { return next(-1); }
  int next(int v) const {
    for (int i = v + 1; i < n_;) {
      std::uint64_t w = words_[i >> 6] >> (i & 63);
      if (w) return i + std::countr_zero(w);
      i = ((i >> 6) + 1) << 6;
    }
    return -1;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
  }

 private:
  void check(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("VertexSet: index out of range");
  }
  void same(const VertexSet& o) const {
    if (n_ != o.n_) throw std::invalid_argument("VertexSet: universe mismatch");
  }
  void trim() {
    if (n_ & 63) words_.back() &= (1ULL << (n_ & 63)) - 1;
  }

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace hamfree
