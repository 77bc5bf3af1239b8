#pragma once

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hamfree/graph.hpp"

namespace hamfree {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Edge-list text format: first line "n m", then m lines "u v" with
// 0 <= u < v < n, ASCII decimal, LF line endings.
// ---------------------------------------------------------------------------

inline Graph read_edge_list(std::istream& in) {
  long long n = -1, m = -1;
  if (!(in >> n >> m)) throw ParseError("edge list: missing 'n m' header");
  if (n < 0 || m < 0) throw ParseError("edge list: negative count in header");
  Graph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    long long u, v;
    if (!(in >> u >> v)) throw ParseError("edge list: expected " + std::to_string(m) +
                                          " edges, got " + std::to_string(i));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("edge list: endpoint out of range on edge " + std::to_string(i));
    if (u >= v) throw ParseError("edge list: edges must satisfy u < v (edge " +
                                 std::to_string(i) + ")");
    if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
      throw ParseError("edge list: duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  std::string rest;
  while (in >> rest)
    if (!rest.empty()) throw ParseError("edge list: trailing content");
  return g;
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edge_list()) out << u << ' ' << v << '\n';
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

// ---------------------------------------------------------------------------
// graph6: optional ">>graph6<<" header; N(n) then the upper-triangle bit
// vector in column order (x01, x02, x12, x03, ...), packed big-endian six
// bits per byte, each byte offset by 63, trailing pad bits zero.
// ---------------------------------------------------------------------------

inline std::string to_graph6(const Graph& g) {
  int n = g.order();
  if (n > 258047) throw ParseError("graph6: order too large");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

inline Graph from_graph6(std::string s) {
  const std::string header = ">>graph6<<";
  if (s.rfind(header, 0) == 0) s.erase(0, header.size());
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  if (s.empty()) throw ParseError("graph6: empty input");
  std::size_t pos = 0;
  auto byte = [&](std::size_t i) -> int {
    if (i >= s.size()) throw ParseError("graph6: truncated input");
    int c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte out of range");
    return c - 63;
  };
  long long n;
  if (static_cast<unsigned char>(s[0]) == 126) {
    if (s.size() >= 2 && static_cast<unsigned char>(s[1]) == 126)
      throw ParseError("graph6: orders above 258047 unsupported");
    n = (static_cast<long long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
    pos = 4;
  } else {
    n = byte(0);
    pos = 1;
  }
  Graph g(static_cast<int>(n));
  long long nbits = n * (n - 1) / 2;
  long long need = (nbits + 5) / 6;
  if (static_cast<long long>(s.size()) - static_cast<long long>(pos) != need)
    throw ParseError("graph6: wrong payload length");
  long long bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit) {
      int b6 = byte(pos + bit / 6);
      if ((b6 >> (5 - bit % 6)) & 1) g.add_edge(u, v);
    }
  // pad bits must be zero
  if (nbits % 6) {
    int last = byte(s.size() - 1);
    int pad = 6 - static_cast<int>(nbits % 6);
    if (last & ((1 << pad) - 1)) throw ParseError("graph6: nonzero padding bits");
  }
  return g;
}

// ---------------------------------------------------------------------------
// Auto-detection: a graph6 payload vs an "n m" edge-list header.
// ---------------------------------------------------------------------------

enum class GraphFormat { EdgeList, Graph6 };

inline GraphFormat detect_format(const std::string& text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i >= text.size()) throw ParseError("empty graph input");
  if (text.compare(i, 10, ">>graph6<<") == 0) return GraphFormat::Graph6;
  // An edge list starts with two decimal integers on the first line.
  std::size_t eol = text.find('\n', i);
  std::string first = text.substr(i, eol == std::string::npos ? std::string::npos : eol - i);
  std::istringstream probe(first);
  long long a, b;
  std::string rest;
  if (probe >> a >> b && !(probe >> rest)) return GraphFormat::EdgeList;
  return GraphFormat::Graph6;
}

inline Graph parse_graph_auto(const std::string& text) {
  switch (detect_format(text)) {
    case GraphFormat::EdgeList:
      return parse_edge_list(text);
    case GraphFormat::Graph6:
    default: {
      std::string t = text;
      // strip surrounding whitespace
      while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
      return from_graph6(t);
    }
  }
}

}  // namespace hamfree
