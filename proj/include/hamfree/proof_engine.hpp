#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hamfree/class_recognition.hpp"
#include "hamfree/cycle.hpp"
#include "hamfree/graph.hpp"
#include "hamfree/invariants.hpp"
#include "hamfree/isomorphism.hpp"

namespace hamfree {

// ---------------------------------------------------------------------------
// SpliceSpec: a longer-cycle construction as arcs of a host cycle plus
// explicit connectors. Consecutive segment endpoints must be joined by an
// edge of the graph or, on an augmented host, by the virtual closing edge.
// ---------------------------------------------------------------------------

struct SpliceSpec {
  struct Arc {
    int from, to;
    bool forward;
  };
  struct Detour {
    std::vector<int> vertices;  // off-cycle vertices, traversed in order
  };
  using Segment = std::variant<Arc, Detour>;
  std::vector<Segment> segments;

  SpliceSpec& arc(int from, int to, bool forward = true) {
    segments.push_back(Arc{from, to, forward});
    return *this;
  }
  SpliceSpec& detour(std::vector<int> vs) {
    segments.push_back(Detour{std::move(vs)});
    return *this;
  }
};

struct SpliceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace engine_detail {

/// Uniform cyclic view: a plain cycle, or an a-b path closed by a virtual
/// edge between its last and first vertex.
struct Ring {
  const Graph* g = nullptr;
  std::vector<int> seq;
  std::vector<int> pos;  // host vertex -> position, -1 off ring
  bool path_mode = false;

  static Ring of(const Graph& g, const OrientedCycle& c) {
    Ring r;
    r.g = &g;
    r.seq = c.vertices();
    r.index();
    return r;
  }
  static Ring of(const Graph& g, const AugmentedCycle& c) {
    Ring r;
    r.g = &g;
    r.seq = c.vertices();
    r.path_mode = true;
    r.index();
    return r;
  }

  void index() {
    pos.assign(g->order(), -1);
    for (std::size_t i = 0; i < seq.size(); ++i) pos[seq[i]] = static_cast<int>(i);
  }
  int length() const { return static_cast<int>(seq.size()); }
  bool on(int v) const { return v >= 0 && v < static_cast<int>(pos.size()) && pos[v] >= 0; }
  int at(int p) const {
    int L = length();
    return seq[((p % L) + L) % L];
  }
  int succ(int v, int h = 1) const { return at(pos[v] + h); }
  int pred(int v, int h = 1) const { return at(pos[v] - h); }
  int a() const { return seq.front(); }
  int b() const { return seq.back(); }
  VertexSet vset() const { return VertexSet::from(g->order(), seq); }

  /// The step between ring positions p and q (adjacent mod L) crosses the
  /// virtual edge exactly when it joins the last and first position.
  bool step_virtual(int p, int q) const {
    if (!path_mode) return false;
    int L = length();
    return (p == L - 1 && q == 0) || (p == 0 && q == L - 1);
  }
};

struct SpliceResult {
  bool ok = false;
  std::vector<int> seq;  // cycle order; path mode: rotated to a..b path order
  std::string error;
};

inline SpliceResult apply_splice(const Ring& ring, const SpliceSpec& spec) {
  const Graph& g = *ring.g;
  SpliceResult out;
  if (spec.segments.empty()) {
    out.error = "empty splice";
    return out;
  }
  std::vector<int> seq;
  std::vector<std::pair<int, int>> joints;  // consecutive pairs needing a connector
  int virtual_uses = 0;
  int prev_last = -1;
  for (const auto& seg : spec.segments) {
    int first = -1, last = -1;
    if (const auto* arc = std::get_if<SpliceSpec::Arc>(&seg)) {
      if (!ring.on(arc->from) || !ring.on(arc->to)) {
        out.error = "arc endpoint not on the cycle";
        return out;
      }
      int step = arc->forward ? 1 : -1;
      int L = ring.length();
      int p = ring.pos[arc->from];
      seq.push_back(arc->from);
      while (ring.at(p) != arc->to) {
        int q = ((p + step) % L + L) % L;
        if (ring.step_virtual(p, q)) ++virtual_uses;
        seq.push_back(ring.at(q));
        p = q;
        if (static_cast<int>(seq.size()) > 2 * L) {
          out.error = "arc does not close";
          return out;
        }
      }
      first = arc->from;
      last = arc->to;
    } else {
      const auto& det = std::get<SpliceSpec::Detour>(seg);
      if (det.vertices.empty()) {
        out.error = "empty detour";
        return out;
      }
      for (int v : det.vertices) {
        if (v < 0 || v >= g.order()) {
          out.error = "detour vertex out of range";
          return out;
        }
        if (ring.on(v)) {
          out.error = "detour vertex lies on the cycle";
          return out;
        }
        seq.push_back(v);
      }
      for (std::size_t i = 0; i + 1 < det.vertices.size(); ++i)
        joints.emplace_back(det.vertices[i], det.vertices[i + 1]);
      first = det.vertices.front();
      last = det.vertices.back();
    }
    if (prev_last >= 0) joints.emplace_back(prev_last, first);
    prev_last = last;
  }
  // closing connector
  {
    int first = seq.front();
    joints.emplace_back(prev_last, first);
  }
  for (auto [u, v] : joints) {
    bool is_virtual = ring.path_mode && ((u == ring.a() && v == ring.b()) ||
                                         (u == ring.b() && v == ring.a()));
    if (is_virtual) {
      ++virtual_uses;
      continue;
    }
    if (!g.has_edge(u, v)) {
      out.error = "missing connector " + std::to_string(u) + "-" + std::to_string(v);
      return out;
    }
  }
  if (ring.path_mode && virtual_uses != 1) {
    out.error = virtual_uses == 0 ? "virtual edge not traversed"
                                  : "virtual edge traversed more than once";
    return out;
  }
  // distinctness
  {
    std::vector<char> seen(g.order(), 0);
    for (int v : seq) {
      if (seen[v]) {
        out.error = "repeated vertex " + std::to_string(v);
        return out;
      }
      seen[v] = 1;
    }
  }
  if (seq.size() < 3) {
    out.error = "result shorter than a cycle";
    return out;
  }
  if (ring.path_mode) {
    // rotate so the virtual crossing becomes the wrap, oriented a..b
    int n = static_cast<int>(seq.size());
    int cut = -1;
    for (int i = 0; i < n; ++i) {
      int u = seq[i], v = seq[(i + 1) % n];
      if ((u == ring.a() && v == ring.b()) || (u == ring.b() && v == ring.a())) {
        cut = i;
        break;
      }
    }
    if (cut < 0) throw std::logic_error("apply_splice: virtual crossing not found");
    std::vector<int> rotated;
    rotated.reserve(n);
    for (int i = 0; i < n; ++i) rotated.push_back(seq[(cut + 1 + i) % n]);
    if (rotated.front() == ring.b()) std::reverse(rotated.begin(), rotated.end());
    out.seq = std::move(rotated);
  } else {
    if (virtual_uses != 0) throw std::logic_error("apply_splice: virtual edge on plain cycle");
    out.seq = std::move(seq);
  }
  out.ok = true;
  return out;
}

}  // namespace engine_detail

/// Apply a splice to a plain cycle. The result is validated: distinct
/// vertices, consecutive adjacency, arcs on the host cycle.
inline OrientedCycle splice_cycle(const Graph& g, const OrientedCycle& c, const SpliceSpec& spec) {
  auto res = engine_detail::apply_splice(engine_detail::Ring::of(g, c), spec);
  if (!res.ok) throw SpliceError("splice_cycle: " + res.error);
  return OrientedCycle(g, res.seq);
}

/// Apply a splice to an augmented cycle. The virtual edge must be traversed
/// exactly once, so that removing it leaves an a-b path of the graph.
inline AugmentedCycle splice_cycle(const Graph& g, const AugmentedCycle& c, const SpliceSpec& spec) {
  auto res = engine_detail::apply_splice(engine_detail::Ring::of(g, c), spec);
  if (!res.ok) throw SpliceError("splice_cycle: " + res.error);
  return AugmentedCycle(g, OrientedPath(g, res.seq));
}

// ---------------------------------------------------------------------------
// Component triviality (the components of G - C for a longest cycle/path of a
// qualifying graph must all be singletons).
// ---------------------------------------------------------------------------

struct ComponentReport {
  VertexSet vertices;
  bool trivial = false;
};

inline std::vector<ComponentReport> check_component_trivial(const Graph& g,
                                                            const VertexSet& on_view) {
  std::vector<ComponentReport> out;
  for (auto& comp : components_after_removal(g, on_view))
    out.push_back({comp, comp.count() == 1});
  return out;
}

inline std::vector<ComponentReport> check_component_trivial(const Graph& g,
                                                            const OrientedCycle& c) {
  return check_component_trivial(g, c.vertex_set(g.order()));
}

inline std::vector<ComponentReport> check_component_trivial(const Graph& g,
                                                            const OrientedPath& p) {
  return check_component_trivial(g, p.vertex_set(g.order()));
}

/// When a non-trivial component survives next to a cycle/path with clean
/// rotation structure, the component's own edge plus the successor set of its
/// attachment is an induced edge-plus-k-isolated-vertices witness.
inline std::optional<VertexSet> component_freeness_witness(const Graph& g, const VertexSet& succs,
                                                           const VertexSet& component, int k) {
  if (component.count() < 2) return std::nullopt;
  int e1 = -1, e2 = -1;
  for (int v = component.first(); v >= 0 && e1 < 0; v = component.next(v)) {
    VertexSet nb = g.neighbors(v) & component;
    if (!nb.empty()) {
      e1 = v;
      e2 = nb.first();
    }
  }
  if (e1 < 0) return std::nullopt;
  VertexSet witness(g.order());
  witness.set(e1);
  witness.set(e2);
  int taken = 0;
  for (int v = succs.first(); v >= 0 && taken < k; v = succs.next(v)) {
    witness.set(v);
    ++taken;
  }
  if (taken < k) return std::nullopt;
  if (!induces_edge_plus_isolated(g, witness, k)) return std::nullopt;
  return witness;
}

// ---------------------------------------------------------------------------
// Rotation violations: the two facts that hold around a longest cycle
// (or longest a-b path) and a component H of the remainder. Each reported
// violation carries the explicit longer cycle or path that rebuilds it.
// ---------------------------------------------------------------------------

struct RotationViolation {
  enum class Kind { SuccessorHit, CrossingPath };
  Kind kind;
  int u = -1, v = -1;      // v unused for SuccessorHit
  bool reversed = false;   // found on the reversed orientation (the minus side)
  std::vector<int> longer; // cycle order, or a-b path order for path input
};

namespace engine_detail {

inline std::optional<std::vector<int>> bfs_path(const Graph& g, int from, int to,
                                                const VertexSet& allowed_internal,
                                                bool allow_direct = true) {
  std::vector<int> parent(g.order(), -1);
  std::vector<int> queue{from};
  parent[from] = from;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int u = queue[qi];
    const VertexSet& nb = g.neighbors(u);
    for (int w = nb.first(); w >= 0; w = nb.next(w)) {
      if (parent[w] >= 0) continue;
      if (w == to) {
        if (u == from && !allow_direct) continue;  // must pass through the region
        std::vector<int> path{to};
        for (int v = u; v != from; v = parent[v]) path.push_back(v);
        path.push_back(from);
        std::reverse(path.begin(), path.end());
        return path;
      }
      if (!allowed_internal.test(w)) continue;
      parent[w] = u;
      queue.push_back(w);
    }
  }
  if (from == to) return std::vector<int>{from};
  return std::nullopt;
}

inline std::vector<int> interior(const std::vector<int>& path) {
  if (path.size() <= 2) return {};
  return std::vector<int>(path.begin() + 1, path.end() - 1);
}

/// Longer cycle from u, u+ both attached to H: u (through H) u+ ->C u.
inline SpliceSpec rotation_template(const Ring& ring, int u, const std::vector<int>& h_interior) {
  SpliceSpec spec;
  spec.arc(ring.succ(u), u, true);
  spec.detour(h_interior);
  return spec;
}

/// Longer cycle from a u+v+ path Q avoiding C:
/// u (through H) v <-C u+ (Q) v+ ->C u.
inline SpliceSpec crossing_template(const Ring& ring, int u, int v,
                                    const std::vector<int>& h_interior,
                                    const std::vector<int>& q_interior) {
  SpliceSpec spec;
  spec.arc(v, ring.succ(u), false);
  if (!q_interior.empty()) spec.detour(q_interior);
  spec.arc(ring.succ(v), u, true);
  if (!h_interior.empty()) spec.detour(h_interior);
  return spec;
}

}  // namespace engine_detail

inline std::vector<RotationViolation> rotation_violations(const Graph& g, const OrientedCycle& c,
                                                          const VertexSet& component) {
  VertexSet on = c.vertex_set(g.order());
  {
    auto comps = components_after_removal(g, on);
    bool found = false;
    for (auto& h : comps) found = found || h == component;
    if (!found) throw std::invalid_argument("rotation_violations: not a component of G - C");
  }
  std::vector<RotationViolation> out;
  VertexSet nh = neighborhood_of_set(g, component);
  auto ring = engine_detail::Ring::of(g, c);
  VertexSet off_limits = on | component;
  VertexSet crossing_allowed = off_limits.complement();

  auto h_path_interior = [&](int from, int to) {
    auto p = engine_detail::bfs_path(g, from, to, component, /*allow_direct=*/false);
    if (!p) throw std::logic_error("rotation_violations: attachment not joined through component");
    return engine_detail::interior(*p);
  };

  for (int u = nh.first(); u >= 0; u = nh.next(u)) {
    int up = ring.succ(u);
    if (!nh.test(up)) continue;
    auto spec = engine_detail::rotation_template(ring, u, h_path_interior(u, up));
    auto res = engine_detail::apply_splice(ring, spec);
    if (!res.ok) throw std::logic_error("rotation_violations: invalid rebuild: " + res.error);
    out.push_back({RotationViolation::Kind::SuccessorHit, u, -1, false, res.seq});
  }
  auto crossing_pass = [&](const engine_detail::Ring& r, bool reversed) {
    for (int u = nh.first(); u >= 0; u = nh.next(u))
      for (int v = nh.next(u); v >= 0; v = nh.next(v)) {
        // consecutive attachments are the rotation case, recorded above
        if (r.succ(u) == v || r.succ(v) == u) continue;
        int e1 = r.succ(u), e2 = r.succ(v);
        auto q = engine_detail::bfs_path(g, e1, e2, crossing_allowed);
        if (!q) continue;
        auto spec = engine_detail::crossing_template(r, u, v, h_path_interior(u, v),
                                                     engine_detail::interior(*q));
        auto res = engine_detail::apply_splice(r, spec);
        if (!res.ok) throw std::logic_error("rotation_violations: invalid rebuild: " + res.error);
        out.push_back({RotationViolation::Kind::CrossingPath, u, v, reversed, res.seq});
      }
  };
  crossing_pass(ring, false);
  auto rev = engine_detail::Ring::of(g, c.reversed(g));
  crossing_pass(rev, true);
  return out;
}

inline std::vector<RotationViolation> rotation_violations(const Graph& g, const OrientedPath& p,
                                                          const VertexSet& component) {
  VertexSet on = p.vertex_set(g.order());
  {
    auto comps = components_after_removal(g, on);
    bool found = false;
    for (auto& h : comps) found = found || h == component;
    if (!found) throw std::invalid_argument("rotation_violations: not a component of G - P");
  }
  std::vector<RotationViolation> out;
  VertexSet nh = neighborhood_of_set(g, component);
  VertexSet crossing_allowed = (on | component).complement();

  auto h_interior = [&](int from, int to) {
    auto hp = engine_detail::bfs_path(g, from, to, component, /*allow_direct=*/false);
    if (!hp) throw std::logic_error("rotation_violations: attachment not joined through component");
    return engine_detail::interior(*hp);
  };
  auto build_path = [&](const OrientedPath& view, int u, int v,
                        const std::vector<int>& hint,
                        const std::vector<int>& qint) -> std::vector<int> {
    // a ->P u (H) v <-P u+ (Q) v+ ->P b ; v = -1 encodes the successor-hit
    // rebuild a ->P u (H) u+ ->P b.
    std::vector<int> seq = view.subpath(view.a(), u);
    for (int w : hint) seq.push_back(w);
    if (v < 0) {
      auto tail = view.subpath(view.successor(u), view.b());
      seq.insert(seq.end(), tail.begin(), tail.end());
      return seq;
    }
    seq.push_back(v);
    for (int pos = view.position(v) - 1; pos > view.position(u); --pos)
      seq.push_back(view.vertices()[pos]);
    for (int w : qint) seq.push_back(w);
    auto tail = view.subpath(view.successor(v), view.b());
    seq.insert(seq.end(), tail.begin(), tail.end());
    return seq;
  };
  auto pass = [&](const OrientedPath& view, bool reversed) {
    for (int u = nh.first(); u >= 0; u = nh.next(u)) {
      int up = view.successor(u);
      if (up < 0 || !nh.test(up)) continue;
      auto seq = build_path(view, u, -1, h_interior(u, up), {});
      OrientedPath longer(g, seq);  // validates
      auto ordered = reversed ? std::vector<int>(seq.rbegin(), seq.rend()) : seq;
      out.push_back({RotationViolation::Kind::SuccessorHit, u, -1, reversed, ordered});
    }
    for (int u = nh.first(); u >= 0; u = nh.next(u))
      for (int v = nh.next(u); v >= 0; v = nh.next(v)) {
        int x1 = view.position(u) < view.position(v) ? u : v;
        int x2 = x1 == u ? v : u;
        if (view.successor(x1) == x2) continue;  // the rotation case, recorded above
        int e1 = view.successor(x1), e2 = view.successor(x2);
        if (e1 < 0 || e2 < 0) continue;
        auto q = engine_detail::bfs_path(g, e1, e2, crossing_allowed);
        if (!q) continue;
        auto seq = build_path(view, x1, x2, h_interior(x1, x2), engine_detail::interior(*q));
        OrientedPath longer(g, seq);
        auto ordered = reversed ? std::vector<int>(seq.rbegin(), seq.rend()) : seq;
        out.push_back({RotationViolation::Kind::CrossingPath, x1, x2, reversed, ordered});
      }
  };
  pass(p, false);
  pass(p.reversed(g), true);
  return out;
}

// ---------------------------------------------------------------------------
// OutsideConfiguration: the anchor machinery around an outside vertex x.
// ---------------------------------------------------------------------------

struct OutsideConfiguration {
  bool path_mode = false;
  std::vector<int> ring_seq;  // cycle order; path mode: a..b, virtual close
  int x = -1;
  int k = 0;
  int d = 0;                  // cycle: deg(x); path: |N(x) minus {b}|
  std::vector<int> anchors;   // in traversal order
  VertexSet X, Y;
};

struct ConfigurationOutcome {
  enum class Status { Ok, LongerFound, NontrivialComponent };
  Status status = Status::Ok;
  OutsideConfiguration config;
  std::vector<int> longer;  // cycle order / a-b path order refuting longest-ness
  std::string detail;
};

namespace engine_detail {

inline ConfigurationOutcome build_configuration(const Graph& g, Ring ring, int x, int k) {
  if (ring.on(x)) throw std::invalid_argument("build_outside_configuration: x lies on the cycle");
  if (x < 0 || x >= g.order())
    throw std::invalid_argument("build_outside_configuration: x out of range");
  ConfigurationOutcome out;
  VertexSet on = ring.vset();
  for (auto& rep : check_component_trivial(g, on))
    if (!rep.trivial) {
      out.status = ConfigurationOutcome::Status::NontrivialComponent;
      out.detail = "component of size " + std::to_string(rep.vertices.count()) +
                   " next to the cycle is not trivial";
      return out;
    }

  OutsideConfiguration cfg;
  cfg.path_mode = ring.path_mode;
  cfg.ring_seq = ring.seq;
  cfg.x = x;
  cfg.k = k;
  VertexSet nx = g.neighbors(x);
  std::vector<int> anchors;
  for (int p = 0; p < ring.length(); ++p) {
    int v = ring.seq[p];
    if (!nx.test(v)) continue;
    if (ring.path_mode && v == ring.b()) continue;
    anchors.push_back(v);
  }
  cfg.anchors = anchors;
  cfg.d = static_cast<int>(anchors.size());

  cfg.X = VertexSet(g.order());
  cfg.X.set(x);
  for (int a : anchors) cfg.X.set(ring.succ(a));
  cfg.Y = VertexSet(g.order());
  cfg.Y.set(x);
  for (int v = nx.first(); v >= 0; v = nx.next(v)) {
    if (!ring.on(v)) throw std::invalid_argument("build_outside_configuration: x has a neighbor off the cycle");
    if (ring.path_mode && v == ring.a()) continue;
    cfg.Y.set(ring.pred(v));
  }

  // Independence of X and of Y; a violating pair rebuilds a longer cycle.
  auto refute = [&](const Ring& r, int anchor_u, int other_anchor,
                    bool via_rotation) -> std::optional<std::vector<int>> {
    SpliceSpec spec = via_rotation ? rotation_template(r, anchor_u, {x})
                                   : crossing_template(r, anchor_u, other_anchor, {x}, {});
    auto res = apply_splice(r, spec);
    if (!res.ok) return std::nullopt;
    return res.seq;
  };
  Ring rev;
  {
    rev.g = &g;
    rev.seq = std::vector<int>(ring.seq.rbegin(), ring.seq.rend());
    rev.path_mode = ring.path_mode;
    rev.index();
  }
  auto check_side = [&](const VertexSet& s, const Ring& r) -> std::optional<std::vector<int>> {
    for (int u = s.first(); u >= 0; u = s.next(u)) {
      VertexSet bad = g.neighbors(u) & s;
      for (int w = bad.first(); w >= 0; w = bad.next(w)) {
        if (w < u) continue;
        // u-w is an edge inside {x} u N(x)^+ w.r.t. r's orientation
        int au = u == x ? -1 : r.pred(u);
        int aw = w == x ? -1 : r.pred(w);
        std::optional<std::vector<int>> longer;
        if (u == x || w == x)
          longer = refute(r, u == x ? aw : au, -1, true);
        else
          longer = refute(r, au, aw, false);
        if (longer) return longer;
        throw std::logic_error(
            "build_outside_configuration: dependent anchor set without a rebuildable cycle");
      }
    }
    return std::nullopt;
  };
  if (auto longer = check_side(cfg.X, ring)) {
    out.status = ConfigurationOutcome::Status::LongerFound;
    out.longer = *longer;
    out.detail = "anchor successors not independent; cycle was not longest";
    return out;
  }
  if (auto longer = check_side(cfg.Y, rev)) {
    // a splice on the reversed ring is a cycle of g as-is; path results are
    // re-oriented back to a..b
    std::vector<int> seq = *longer;
    if (ring.path_mode) std::reverse(seq.begin(), seq.end());
    out.status = ConfigurationOutcome::Status::LongerFound;
    out.longer = seq;
    out.detail = "anchor predecessors not independent; cycle was not longest";
    return out;
  }
  out.config = std::move(cfg);
  return out;
}

}  // namespace engine_detail

inline ConfigurationOutcome build_outside_configuration(const Graph& g, const OrientedCycle& c,
                                                        int x, int k) {
  return engine_detail::build_configuration(g, engine_detail::Ring::of(g, c), x, k);
}

inline ConfigurationOutcome build_outside_configuration(const Graph& g, const AugmentedCycle& c,
                                                        int x, int k) {
  return engine_detail::build_configuration(g, engine_detail::Ring::of(g, c), x, k);
}

// ---------------------------------------------------------------------------
// Alternation analysis.
// ---------------------------------------------------------------------------

struct AnchorProfile {
  int anchor = -1;
  VertexSet pred_in_X;  // neighbors of the anchor's predecessor inside X
  VertexSet succ_in_Y;  // neighbors of the anchor's successor inside Y
};

struct AlternationOutcome {
  enum class Kind { Alternating, LongerCycle, PetersenDetected, FreenessViolation, Unresolved };
  Kind kind = Kind::Unresolved;
  std::vector<int> longer;     // LongerCycle: cycle order / a-b path order
  VertexSet neighborhood_set;  // Alternating: N_G(X) restricted to the cycle
  VertexSet freeness_witness;  // FreenessViolation
  std::string detail;
  std::vector<AnchorProfile> profiles;
};

namespace engine_detail {

struct Analyzer {
  const Graph& g;
  const OutsideConfiguration& cfg;
  int k;
  Ring ring;
  VertexSet nx_set;       // N_G(X)
  VertexSet anchors_set;
  AlternationOutcome unresolved;  // first unresolved record, if any
  bool have_unresolved = false;

  Analyzer(const Graph& graph, const OutsideConfiguration& config, int kk)
      : g(graph), cfg(config), k(kk) {
    ring.g = &g;
    ring.seq = cfg.ring_seq;
    ring.path_mode = cfg.path_mode;
    ring.index();
    nx_set = neighborhood_of_set(g, cfg.X);
    anchors_set = VertexSet::from(g.order(), cfg.anchors);
    if (!cfg.X.test(cfg.x) || ring.on(cfg.x))
      throw std::invalid_argument("analyze_alternation: configuration inconsistent with graph");
  }

  AlternationOutcome finish(AlternationOutcome o) {
    o.profiles = profiles();
    return o;
  }
  std::vector<AnchorProfile> profiles() const {
    std::vector<AnchorProfile> out;
    for (int a : cfg.anchors) {
      AnchorProfile p;
      p.anchor = a;
      p.pred_in_X = g.neighbors(ring.pred(a)) & cfg.X;
      p.succ_in_Y = g.neighbors(ring.succ(a)) & cfg.Y;
      out.push_back(std::move(p));
    }
    return out;
  }

  AlternationOutcome longer_outcome(std::vector<int> seq, const std::string& what) {
    AlternationOutcome o;
    o.kind = AlternationOutcome::Kind::LongerCycle;
    o.longer = std::move(seq);
    o.detail = what;
    return finish(o);
  }
  AlternationOutcome freeness_outcome(VertexSet witness, const std::string& what) {
    if (!induces_edge_plus_isolated(g, witness, k))
      throw std::logic_error("analyze_alternation: malformed freeness witness");
    AlternationOutcome o;
    o.kind = AlternationOutcome::Kind::FreenessViolation;
    o.freeness_witness = std::move(witness);
    o.detail = what;
    return finish(o);
  }
  void record_unresolved(const std::string& why) {
    if (have_unresolved) return;
    have_unresolved = true;
    unresolved.kind = AlternationOutcome::Kind::Unresolved;
    unresolved.detail = why;
  }

  // K2 u kK1 from a vertex t that sees an independent side (X by default)
  // in fewer than |side|-k+1 vertices.
  std::optional<VertexSet> dichotomy_witness(int t) { return dichotomy_witness_in(t, cfg.X); }
  std::optional<VertexSet> dichotomy_witness_in(int t, const VertexSet& side) {
    VertexSet hits = g.neighbors(t) & side;
    if (hits.empty()) return std::nullopt;
    int partner = hits.first();
    VertexSet pool = side - g.neighbors(t);
    pool.reset(partner);
    if (pool.test(t)) pool.reset(t);
    if (pool.count() < k) return std::nullopt;
    VertexSet w(g.order());
    w.set(t);
    w.set(partner);
    int taken = 0;
    for (int v = pool.first(); v >= 0 && taken < k; v = pool.next(v), ++taken) w.set(v);
    if (!induces_edge_plus_isolated(g, w, k)) return std::nullopt;
    return w;
  }

  std::optional<std::vector<int>> fire(const SpliceSpec& spec) {
    auto res = apply_splice(ring, spec);
    if (!res.ok) return std::nullopt;
    if (static_cast<int>(res.seq.size()) <= ring.length()) return std::nullopt;
    return res.seq;
  }

  AlternationOutcome run() {
    int L = ring.length();
    int limit = ring.path_mode ? L - 1 : L;  // skip the virtual closing step
    for (int t = 0; t < limit; ++t) {
      int u = ring.seq[t], v = ring.at(t + 1);
      if (anchors_set.test(u)) continue;  // anchor -> successor always flips
      bool u_in = nx_set.test(u), v_in = nx_set.test(v);
      if (u_in != v_in) continue;
      if (!u_in) {
        // both outside N(X): u, v plus k vertices of X avoiding them
        VertexSet pool = cfg.X;
        if (pool.test(u)) pool.reset(u);
        if (pool.test(v)) pool.reset(v);
        if (pool.count() < k) {
          record_unresolved("edge " + std::to_string(u) + "-" + std::to_string(v) +
                            " outside N(X) but X too small for a witness");
          continue;
        }
        VertexSet w(g.order());
        w.set(u);
        w.set(v);
        int taken = 0;
        for (int z = pool.first(); z >= 0 && taken < k; z = pool.next(z), ++taken) w.set(z);
        return freeness_outcome(std::move(w), "edge with both ends outside N(X)");
      }
      auto res = resolve_interior(u, v);
      if (res) return std::move(*res);
    }
    if (have_unresolved) return finish(std::move(unresolved));
    AlternationOutcome o;
    o.kind = AlternationOutcome::Kind::Alternating;
    o.neighborhood_set = nx_set & ring.vset();
    return finish(o);
  }

  // Resolve an interior edge u-v with both ends in N(X): either some splice
  // template rebuilds a longer cycle, or a freeness violation is extracted,
  // or (k = 3) the Petersen wiring is confirmed. Unresolved means a stated
  // hypothesis is too weak for the case analysis to close.
  std::optional<AlternationOutcome> resolve_interior(int u, int v) {
    int d = cfg.d;
    if (d < k) {
      record_unresolved("outside vertex degree " + std::to_string(d) + " below k");
      return std::nullopt;
    }
    // rotate anchor labels so the edge lies in the wrap gap z_d+ .. z_1
    int e = -1;
    {
      int pv = ring.pos[v];
      int best_delta = ring.length() + 1;
      for (int i = 0; i < d; ++i) {
        int pa = ring.pos[cfg.anchors[i]];
        int delta = ((pa - pv) % ring.length() + ring.length()) % ring.length();
        if (delta < best_delta) {
          best_delta = delta;
          e = i;
        }
      }
    }
    auto z = [&](int m) { return cfg.anchors[(e + m - 1) % d]; };
    auto zp = [&](int m) { return ring.succ(z(m)); };
    auto why = [&](int m) {
      int zz = z(m);
      return (ring.path_mode && zz == ring.a()) ? ring.b() : zz;
    };

    int need = d - k + 2;
    auto x_neighbors_of = [&](int t) {
      std::vector<int> idx;
      for (int m = 1; m <= d; ++m)
        if (g.has_edge(t, zp(m))) idx.push_back(m);
      return idx;
    };
    auto nu = x_neighbors_of(u);
    auto nv = x_neighbors_of(v);
    bool xv = g.has_edge(v, cfg.x);
    if (static_cast<int>(nu.size()) < need) {
      if (auto w = dichotomy_witness(u)) return freeness_outcome(std::move(*w), "dichotomy fails at " + std::to_string(u));
      record_unresolved("no dichotomy witness at " + std::to_string(u));
      return std::nullopt;
    }
    if (static_cast<int>(nv.size()) + (xv ? 1 : 0) < need) {
      if (auto w = dichotomy_witness(v)) return freeness_outcome(std::move(*w), "dichotomy fails at " + std::to_string(v));
      record_unresolved("no dichotomy witness at " + std::to_string(v));
      return std::nullopt;
    }
    int r = nv.back();
    int l = -1;
    for (int m : nu)
      if (!ring.path_mode || zp(m) != ring.b()) {
        l = m;
        break;
      }
    if (l < 0) {
      record_unresolved("anchor-successor neighbors of u all equal b");
      return std::nullopt;
    }
    if (r > l) {
      // crossing chords u-z_l+ and v-z_r+ splice through x
      SpliceSpec spec;
      spec.arc(zp(l), z(r), true).detour({cfg.x}).arc(z(l), v, false).arc(zp(r), u, true);
      if (auto seq = fire(spec)) return longer_outcome(std::move(*seq), "crossing chords");
      record_unresolved("crossing-chord template did not validate");
      return std::nullopt;
    }
    if (l >= d) {
      record_unresolved("minimum chord index reaches d; degree hypothesis short");
      return std::nullopt;
    }
    int w = ring.succ(zp(l));
    if (w == z(l + 1)) {
      SpliceSpec spec;
      spec.detour({cfg.x}).arc(z(l + 1), u, true).arc(zp(l), zp(r), false).arc(v, z(r), true);
      if (auto seq = fire(spec)) return longer_outcome(std::move(*seq), "anchor shortcut");
      record_unresolved("anchor-shortcut template did not validate");
      return std::nullopt;
    }
    auto nw = x_neighbors_of(w);
    for (int m : nw) {
      if (m == l) continue;
      if (m < r) {
        SpliceSpec spec;
        spec.detour({cfg.x})
            .arc(z(r), zp(m), false)
            .arc(w, u, true)
            .arc(zp(l), zp(r), false)
            .arc(v, z(m), true);
        if (auto seq = fire(spec)) return longer_outcome(std::move(*seq), "chord relay (low)");
        record_unresolved("low chord-relay template did not validate");
        return std::nullopt;
      }
      if (m > l) {
        SpliceSpec spec;
        spec.detour({cfg.x})
            .arc(z(m), w, false)
            .arc(zp(m), u, true)
            .arc(zp(l), zp(r), false)
            .arc(v, z(r), true);
        if (auto seq = fire(spec)) return longer_outcome(std::move(*seq), "chord relay (high)");
        record_unresolved("high chord-relay template did not validate");
        return std::nullopt;
      }
    }
    if (static_cast<int>(nw.size()) < need) {
      if (auto wit = dichotomy_witness(w)) return freeness_outcome(std::move(*wit), "dichotomy fails at " + std::to_string(w));
      record_unresolved("no dichotomy witness at relay vertex");
      return std::nullopt;
    }
    // all relay neighbors sit in [r..l], so l - r + 1 >= d - k + 2
    if (!ring.path_mode) {
      if (2 * d != 3 * (k - 1)) {
        record_unresolved("outside degree " + std::to_string(d) + " not tight for k=" + std::to_string(k));
        return std::nullopt;
      }
      if (!(r == d - k + 1 && l == k - 1 && v == z(1) && u == ring.pred(z(1)))) {
        record_unresolved("tightness equalities failed on interior edge");
        return std::nullopt;
      }
    } else {
      if (!g.has_edge(cfg.x, ring.b())) {
        record_unresolved("path endpoint b not adjacent to x; degree hypothesis short");
        return std::nullopt;
      }
      if (2 * d != 3 * k - 3) {
        record_unresolved("outside degree " + std::to_string(d) + " not tight for k=" + std::to_string(k));
        return std::nullopt;
      }
      if (!(r == d - k + 1 && l == k - 1 && (v == z(1) || v == ring.b()))) {
        record_unresolved("tightness equalities failed on interior edge");
        return std::nullopt;
      }
    }
    if (k >= 5) return wrap_relay(z, zp, why);
    return endgame(z);
  }

  // k >= 5: the wrap-around relay using both anchor successor and predecessor
  // neighborhoods.
  std::optional<AlternationOutcome> wrap_relay(auto z, auto zp, auto why) {
    int d = cfg.d;
    int yd = why(d), yk = why(k);
    bool c1 = g.has_edge(ring.pred(yd), zp(k - 1));
    bool c2 = g.has_edge(ring.pred(yk), z(d));
    bool c3 = yd == z(d) || g.has_edge(yd, ring.succ(z(d)));
    if (c1 && c2 && c3) {
      SpliceSpec spec;
      spec.detour({cfg.x}).arc(yk, ring.pred(yd), true).arc(zp(k - 1), ring.pred(yk), true);
      if (yd == z(d))
        spec.arc(z(d), z(d), true);
      else
        spec.arc(z(d), yd, false);
      spec.arc(ring.succ(z(d)), z(k - 1), true);
      if (auto seq = fire(spec)) return longer_outcome(std::move(*seq), "wrap relay");
    }
    record_unresolved("wrap-relay chords absent");
    return std::nullopt;
  }

  // k == 3 endgame: either a tight-gap relay extends the cycle, or the
  // Petersen wiring is confirmed (cycle mode), or the endpoint relay extends
  // the path (path mode).
  std::optional<AlternationOutcome> endgame(auto z) {
    auto rz = [&](int rot, int m) { return z(((m - 1 + rot) % 3) + 1); };
    auto rwhy = [&](int rot, int m) {
      int zz = rz(rot, m);
      return (ring.path_mode && zz == ring.a()) ? ring.b() : zz;
    };
    bool all_tight = true;
    for (int rot = 0; rot < 3; ++rot) {
      int w1 = rz(rot, 1), w2 = rz(rot, 2), w3 = rz(rot, 3);
      int y1 = rwhy(rot, 1), y3 = rwhy(rot, 3);
      if (ring.succ(w2, 2) == ring.pred(y3)) continue;
      all_tight = false;
      bool chords = g.has_edge(ring.succ(w1), ring.succ(w2, 2)) &&
                    g.has_edge(ring.pred(y3, 2), ring.pred(y1)) &&
                    g.has_edge(ring.succ(w3), ring.succ(w1, 2)) &&
                    g.has_edge(ring.succ(w2), ring.pred(y3));
      if (!chords) continue;
      SpliceSpec spec;
      spec.detour({cfg.x})
          .arc(y1, ring.succ(w1), true)
          .arc(ring.succ(w2, 2), ring.pred(y3, 2), true)
          .arc(ring.pred(y1), ring.succ(w3), false)
          .arc(ring.succ(w1, 2), ring.succ(w2), true)
          .arc(ring.pred(y3), w3, true);
      if (auto seq = fire(spec)) return longer_outcome(std::move(*seq), "tight-gap relay");
    }
    if (!all_tight) {
      record_unresolved("endgame: loose gap without a validating relay");
      return std::nullopt;
    }
    return ring.path_mode ? endgame_path(z) : endgame_cycle(z);
  }

  std::optional<AlternationOutcome> endgame_cycle(auto z) {
    auto wired = [&](int i, int j) { return g.has_edge(ring.succ(z(i)), ring.pred(z(j))); };
    if (!(wired(1, 3) && wired(2, 1) && wired(3, 2))) {
      record_unresolved("endgame: star wiring incomplete");
      return std::nullopt;
    }
    VertexSet on = ring.vset();
    // outside vertices other than x
    for (int y = 0; y < g.order(); ++y) {
      if (y == cfg.x || on.test(y)) continue;
      int in_x = (g.neighbors(y) & cfg.X).count();
      int in_y = (g.neighbors(y) & cfg.Y).count();
      if (in_x == 1) {
        if (auto w = dichotomy_witness_in(y, cfg.X))
          return freeness_outcome(std::move(*w), "outside vertex sees X exactly once");
      }
      if (in_y == 1) {
        if (auto w = dichotomy_witness_in(y, cfg.Y))
          return freeness_outcome(std::move(*w), "outside vertex sees Y exactly once");
      }
      if (auto res = crossing_through(y, cfg.X, false)) return res;
      if (auto res = crossing_through(y, cfg.Y, true)) return res;
      if (in_x == 0 && in_y == 0) {
        std::vector<int> hit;
        for (int i = 1; i <= 3; ++i)
          if (g.has_edge(y, z(i))) hit.push_back(i);
        if (hit.size() >= 2) {
          if (auto res = outer_detour(z, hit[0], hit[1], y)) return res;
        } else {
          record_unresolved("endgame: extra vertex attached to fewer than two anchors");
          return std::nullopt;
        }
      }
    }
    for (int i = 1; i <= 3; ++i)
      for (int j = i + 1; j <= 3; ++j)
        if (g.has_edge(z(i), z(j)))
          if (auto res = outer_detour(z, i, j, -1)) return res;
    // exact wiring: ring edges + three spokes + three crossing chords,
    // nothing else
    Graph expected(g.order());
    for (int t = 0; t < ring.length(); ++t) expected.add_edge(ring.seq[t], ring.at(t + 1));
    for (int i = 1; i <= 3; ++i) expected.add_edge(cfg.x, z(i));
    expected.add_edge(ring.succ(z(1)), ring.pred(z(3)));
    expected.add_edge(ring.succ(z(2)), ring.pred(z(1)));
    expected.add_edge(ring.succ(z(3)), ring.pred(z(2)));
    if (!(g == expected)) {
      record_unresolved("endgame: unexpected chords beyond the star wiring");
      return std::nullopt;
    }
    if (!is_petersen(g))
      throw std::logic_error("analyze_alternation: wiring says Petersen but the cage test disagrees");
    AlternationOutcome o;
    o.kind = AlternationOutcome::Kind::PetersenDetected;
    o.detail = "cycle, spokes and crossing chords match the Petersen wiring";
    return finish(o);
  }

  // An off-cycle vertex adjacent to two anchor successors (or predecessors)
  // is a crossing path of length two; rebuild the longer cycle.
  std::optional<AlternationOutcome> crossing_through(int y, const VertexSet& side, bool reversed) {
    VertexSet hits = g.neighbors(y) & side;
    if (hits.count() < 2) return std::nullopt;
    int p1 = hits.first(), p2 = hits.next(p1);
    Ring r = ring;
    if (reversed) {
      r.seq = std::vector<int>(ring.seq.rbegin(), ring.seq.rend());
      r.index();
    }
    int u = r.pred(p1), v = r.pred(p2);
    auto spec = crossing_template(r, u, v, {cfg.x}, {y});
    auto res = apply_splice(r, spec);
    if (!res.ok || static_cast<int>(res.seq.size()) <= ring.length()) {
      record_unresolved("two-step crossing template did not validate");
      return std::nullopt;
    }
    std::vector<int> seq = res.seq;
    if (reversed && ring.path_mode) std::reverse(seq.begin(), seq.end());
    return longer_outcome(std::move(seq), "crossing path through an outside vertex");
  }

  // Petersen-endgame detour: anchors z_i, z_j joined directly or through y.
  std::optional<AlternationOutcome> outer_detour(auto z, int i, int j, int y) {
    for (int rot = 0; rot < 3; ++rot) {
      auto rzz = [&](int m) { return z(((m - 1 + rot) % 3) + 1); };
      int w1 = rzz(1), w2 = rzz(2), w3 = rzz(3);
      if (!((w3 == z(i) && w1 == z(j)) || (w3 == z(j) && w1 == z(i)))) continue;
      SpliceSpec spec;
      spec.detour({cfg.x})
          .arc(w2, ring.succ(w2), true)
          .arc(ring.pred(w1), ring.succ(w3), false)
          .arc(ring.pred(w2), ring.succ(w1), false)
          .arc(ring.pred(w3), w3, true);
      if (y >= 0) spec.detour({y});
      spec.arc(w1, w1, true);
      if (auto seq = fire(spec)) return longer_outcome(std::move(*seq), "anchor detour");
    }
    record_unresolved("anchor-detour template did not validate");
    return std::nullopt;
  }

  std::optional<AlternationOutcome> endgame_path(auto z) {
    // relabel so that z_3 is the path start a
    int sigma = -1;
    for (int m = 1; m <= 3; ++m)
      if (z(m) == ring.a()) sigma = m;
    if (sigma < 0) {
      record_unresolved("endgame: path start not adjacent to x");
      return std::nullopt;
    }
    auto w = [&](int m) { return z(((sigma - 3 + m - 1) % 3 + 3) % 3 + 1); };
    int a = ring.a(), b = ring.b();
    if (w(3) != a) throw std::logic_error("endgame_path: relabeling failed");
    if (g.has_edge(a, ring.succ(w(1)))) {
      bool chords = g.has_edge(ring.succ(w(1)), ring.pred(b)) &&
                    g.has_edge(ring.succ(w(2)), ring.pred(w(1))) &&
                    g.has_edge(ring.pred(w(2)), ring.succ(a)) &&
                    g.has_edge(ring.succ(a), b);
      if (chords) {
        SpliceSpec spec;
        spec.arc(a, a, true)
            .arc(ring.succ(w(1)), ring.succ(w(1)), true)
            .arc(ring.pred(b), ring.succ(w(2)), false)
            .arc(ring.pred(w(1)), w(1), true)
            .detour({cfg.x})
            .arc(w(2), ring.pred(w(2)), false)
            .arc(ring.succ(a), ring.succ(a), true)
            .arc(b, b, true);
        if (auto seq = fire(spec)) return longer_outcome(std::move(*seq), "endpoint relay");
      }
      record_unresolved("endgame: endpoint relay chords absent");
      return std::nullopt;
    }
    // no extension available; look for outside leverage at the successor of w1
    int s1 = ring.succ(w(1));
    VertexSet on = ring.vset();
    VertexSet nb = g.neighbors(s1);
    for (int t = nb.first(); t >= 0; t = nb.next(t)) {
      if (on.test(t) || t == cfg.x) continue;
      int in_x = (g.neighbors(t) & cfg.X).count();
      if (in_x == 1) {
        if (auto wdi = dichotomy_witness(t))
          return freeness_outcome(std::move(*wdi), "outside vertex sees X exactly once");
      }
      if (auto res = crossing_through(t, cfg.X, false)) return res;
    }
    VertexSet expect(g.order());
    expect.set(w(1));
    expect.set(ring.pred(w(2)));
    expect.set(ring.pred(b));
    if (nb == expect) {
      record_unresolved("endgame: anchor successor has degree 3; min-degree hypothesis short");
      return std::nullopt;
    }
    record_unresolved("endgame: unexpected adjacency at anchor successor");
    return std::nullopt;
  }
};

}  // namespace engine_detail

inline AlternationOutcome analyze_alternation(const Graph& g, const OutsideConfiguration& cfg,
                                              int k) {
  engine_detail::Analyzer a(g, cfg, k);
  return a.run();
}

// ---------------------------------------------------------------------------
// Witness extraction: the contrapositive independent set.
// ---------------------------------------------------------------------------

struct WitnessOutcome {
  enum class Status { Ok, Hamiltonian, SpanningPathExists, Exceptional, HypothesisFailure };
  Status status = Status::Ok;
  VertexSet independent_set;
  std::string detail;
};

namespace engine_detail {

inline WitnessOutcome witness_from_alternation(const Graph& g, const Ring& ring,
                                               const AlternationOutcome& alt, bool path_mode) {
  if (alt.kind != AlternationOutcome::Kind::Alternating)
    throw std::logic_error("witness_independent_set: analysis did not certify alternation (" +
                           alt.detail + ")");
  VertexSet on = ring.vset();
  VertexSet w = on - alt.neighborhood_set;
  VertexSet s = w | on.complement();
  if (!is_independent_set(g, s))
    throw std::logic_error("witness_independent_set: assembled set not independent");
  int n = g.order();
  if (path_mode ? (2 * s.count() < n) : (2 * s.count() <= n))
    throw std::logic_error("witness_independent_set: assembled set too small");
  WitnessOutcome out;
  out.status = WitnessOutcome::Status::Ok;
  out.independent_set = std::move(s);
  return out;
}

}  // namespace engine_detail

/// Cycle mode: on a non-hamiltonian, non-Petersen graph satisfying the
/// connectivity, degree and freeness hypotheses, returns an independent set
/// larger than half the vertices.
inline WitnessOutcome witness_independent_set(const Graph& g, int k) {
  WitnessOutcome out;
  int n = g.order();
  if (k < 2) throw std::invalid_argument("witness_independent_set: k must be >= 2");
  auto fail = [&](const std::string& why) {
    out.status = WitnessOutcome::Status::HypothesisFailure;
    out.detail = why;
    return out;
  };
  if (n < 3) return fail("fewer than 3 vertices");
  if (2 * min_degree(g) < 3 * (k - 1)) return fail("min degree below 3(k-1)/2");
  if (vertex_connectivity(g) < k) return fail("connectivity below k");
  if (!is_pattern_free(g, k)) return fail("graph is not (K2 u kK1)-free for this k");
  if (is_hamiltonian(g)) {
    out.status = WitnessOutcome::Status::Hamiltonian;
    out.detail = "graph has a spanning cycle";
    return out;
  }
  if (k == 3 && is_petersen(g)) {
    out.status = WitnessOutcome::Status::Exceptional;
    out.detail = "Petersen graph";
    return out;
  }
  auto c = longest_cycle(g);
  if (!c) throw std::logic_error("witness_independent_set: no cycle in a 2-connected graph");
  auto cfg = build_outside_configuration(g, *c, (c->vertex_set(n)).complement().first(), k);
  if (cfg.status != ConfigurationOutcome::Status::Ok)
    throw std::logic_error("witness_independent_set: configuration failed on a longest cycle: " +
                           cfg.detail);
  auto alt = analyze_alternation(g, cfg.config, k);
  if (alt.kind == AlternationOutcome::Kind::PetersenDetected)
    throw std::logic_error("witness_independent_set: Petersen reached past the explicit check");
  return engine_detail::witness_from_alternation(g, engine_detail::Ring::of(g, *c), alt, false);
}

/// Path mode: same extraction around a longest a-b path when no spanning
/// a-b path exists; the set reaches at least half the vertices.
inline WitnessOutcome witness_independent_set(const Graph& g, int k, int a, int b) {
  WitnessOutcome out;
  int n = g.order();
  if (k < 2) throw std::invalid_argument("witness_independent_set: k must be >= 2");
  if (a == b || a < 0 || b < 0 || a >= n || b >= n)
    throw std::invalid_argument("witness_independent_set: bad endpoints");
  auto fail = [&](const std::string& why) {
    out.status = WitnessOutcome::Status::HypothesisFailure;
    out.detail = why;
    return out;
  };
  if (2 * min_degree(g) < 3 * k - 1) return fail("min degree below (3k-1)/2");
  if (vertex_connectivity(g) < k + 1) return fail("connectivity below k+1");
  if (!is_pattern_free(g, k)) return fail("graph is not (K2 u kK1)-free for this k");
  if (hamiltonian_ab_path(g, a, b)) {
    out.status = WitnessOutcome::Status::SpanningPathExists;
    out.detail = "a spanning path joins the endpoints";
    return out;
  }
  OrientedPath p = longest_ab_path(g, a, b);
  AugmentedCycle ac(g, p);
  auto cfg = build_outside_configuration(g, ac, p.vertex_set(n).complement().first(), k);
  if (cfg.status != ConfigurationOutcome::Status::Ok)
    throw std::logic_error("witness_independent_set: configuration failed on a longest path: " +
                           cfg.detail);
  auto alt = analyze_alternation(g, cfg.config, k);
  return engine_detail::witness_from_alternation(g, engine_detail::Ring::of(g, ac), alt, true);
}

// ---------------------------------------------------------------------------
// Instance classification against the two main statements.
// ---------------------------------------------------------------------------

enum class TheoremId { T1_1, T1_4, T1_7, T1_8 };

struct Classification {
  TheoremId theorem = TheoremId::T1_4;
  int k = 0;
  std::optional<bool> degree_ok, connectivity_ok, freeness_ok, bound_ok;
  bool hypotheses_ok = false;
  std::optional<bool> conclusion_ok;
  bool exceptional = false;
  bool counterexample = false;
  std::string first_failed;
};

/// Hypotheses are evaluated cheapest-first with short-circuiting; fields stay
/// unset past the first failure. The conclusion is only computed when every
/// hypothesis holds.
inline Classification classify_instance(const Graph& g, int k, TheoremId theorem) {
  if (theorem != TheoremId::T1_4 && theorem != TheoremId::T1_8)
    throw std::invalid_argument("classify_instance: only the two main statements are classified");
  if (k < 2) throw std::invalid_argument("classify_instance: k must be >= 2");
  Classification c;
  c.theorem = theorem;
  c.k = k;
  bool path_version = theorem == TheoremId::T1_8;
  int n = g.order();
  int degree_threshold = path_version ? 3 * k - 1 : 3 * (k - 1);
  int kappa_threshold = path_version ? k + 1 : k;

  c.degree_ok = n > 0 && 2 * min_degree(g) >= degree_threshold;
  if (!*c.degree_ok) {
    c.first_failed = "degree";
    return c;
  }
  c.connectivity_ok = vertex_connectivity(g) >= kappa_threshold;
  if (!*c.connectivity_ok) {
    c.first_failed = "connectivity";
    return c;
  }
  c.freeness_ok = is_pattern_free(g, k);
  if (!*c.freeness_ok) {
    c.first_failed = "freeness";
    return c;
  }
  int alpha = independence_number(g).value;
  c.bound_ok = path_version ? (2 * alpha < n) : (2 * alpha <= n);
  if (!*c.bound_ok) {
    c.first_failed = "independence bound";
    return c;
  }
  c.hypotheses_ok = true;
  if (path_version) {
    c.conclusion_ok = is_hamiltonian_connected(g).value;
    c.counterexample = !*c.conclusion_ok;
  } else {
    c.conclusion_ok = is_hamiltonian(g);
    if (!*c.conclusion_ok) {
      c.exceptional = is_petersen(g);
      c.counterexample = !c.exceptional;
    }
  }
  return c;
}

}  // namespace hamfree
