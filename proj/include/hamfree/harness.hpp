#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hamfree/class_recognition.hpp"
#include "hamfree/families.hpp"
#include "hamfree/formats.hpp"
#include "hamfree/graph.hpp"
#include "hamfree/invariants.hpp"
#include "hamfree/isomorphism.hpp"
#include "hamfree/proof_engine.hpp"

namespace hamfree::harness {

constexpr int kEnumerationCap = 10;       // absolute cap
constexpr int kMaterializedCap = 9;       // levels kept in memory

struct Filters {
  bool connected_only = false;
  std::optional<int> min_degree;
  std::optional<int> min_connectivity;

  bool pass(const Graph& g) const {
    if (connected_only && !is_connected(g)) return false;
    if (min_degree && (g.order() == 0 || hamfree::min_degree(g) < *min_degree)) return false;
    if (min_connectivity && vertex_connectivity(g) < *min_connectivity) return false;
    return true;
  }
};

namespace detail {

/// Levels of isomorphism-class representatives, built by extending each
/// (n-1)-representative with one new vertex over every neighborhood and
/// deduplicating by canonical form. Representatives are sorted by canonical
/// bytes, which fixes the stream order across runs.
inline const std::vector<Graph>& representatives(int n) {
  if (n < 1 || n > kMaterializedCap)
    throw std::invalid_argument("enumerate_graphs: materialized levels cover 1.." +
                                std::to_string(kMaterializedCap));
  static std::vector<std::vector<Graph>> cache(kMaterializedCap + 1);
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  if (!cache[n].empty() || n == 0) {
    if (!cache[n].empty()) return cache[n];
  }
  if (cache[1].empty()) cache[1] = {Graph(1)};
  for (int level = 2; level <= n; ++level) {
    if (!cache[level].empty()) continue;
    std::unordered_set<std::string> seen;
    std::vector<std::pair<std::string, Graph>> reps;
    for (const Graph& parent : cache[level - 1]) {
      int base = parent.order();
      for (std::uint32_t mask = 0; mask < (1u << base); ++mask) {
        Graph child(base + 1);
        for (auto [u, v] : parent.edge_list()) child.add_edge(u, v);
        for (int v = 0; v < base; ++v)
          if ((mask >> v) & 1) child.add_edge(v, base);
        std::string key = canonical_form(child);
        if (seen.insert(key).second) reps.emplace_back(std::move(key), std::move(child));
      }
    }
    std::sort(reps.begin(), reps.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    cache[level].reserve(reps.size());
    for (auto& [key, g] : reps) cache[level].push_back(std::move(g));
  }
  return cache[n];
}

}  // namespace detail

/// One representative per isomorphism class on n vertices, in a fixed order.
/// Levels up to 9 are materialized; n = 10 streams its classes and is meant
/// for explicitly requested long runs.
class EnumerationStream {
 public:
  EnumerationStream(int n, Filters filters = {}) : n_(n), filters_(filters) {
    if (n < 1 || n > kEnumerationCap)
      throw std::invalid_argument("enumerate_graphs: n out of 1.." +
                                  std::to_string(kEnumerationCap));
  }

  int order() const { return n_; }
  const Filters& filters() const { return filters_; }

  void for_each(const std::function<void(const Graph&)>& fn) const {
    if (n_ <= kMaterializedCap) {
      for (const Graph& g : detail::representatives(n_))
        if (filters_.pass(g)) fn(g);
      return;
    }
    // streaming extension of the top materialized level
    std::unordered_set<std::string> seen;
    for (const Graph& parent : detail::representatives(kMaterializedCap)) {
      int base = parent.order();
      for (std::uint32_t mask = 0; mask < (1u << base); ++mask) {
        Graph child(base + 1);
        for (auto [u, v] : parent.edge_list()) child.add_edge(u, v);
        for (int v = 0; v < base; ++v)
          if ((mask >> v) & 1) child.add_edge(v, base);
        if (!seen.insert(canonical_form(child)).second) continue;
        if (filters_.pass(child)) fn(child);
      }
    }
  }

  /// Materialized access (n <= 9 only).
  std::vector<Graph> graphs() const {
    if (n_ > kMaterializedCap)
      throw std::invalid_argument("EnumerationStream::graphs: use for_each at this order");
    std::vector<Graph> out;
    for_each([&](const Graph& g) { out.push_back(g); });
    return out;
  }

 private:
  int n_;
  Filters filters_;
};

inline EnumerationStream enumerate_graphs(int n, Filters filters = {}) {
  return EnumerationStream(n, filters);
}

/// G(n, p) under a pinned generator: mt19937_64 seeded as given, one draw per
/// vertex pair in lexicographic order, edge present when
/// (draw >> 11) * 2^-53 < p. Identical seeds give identical graphs.
inline Graph random_graph(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("random_graph: p outside [0, 1]");
  std::mt19937_64 eng(seed);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      double draw = static_cast<double>(eng() >> 11) * (1.0 / 9007199254740992.0);
      if (draw < p) g.add_edge(u, v);
    }
  return g;
}

// ---------------------------------------------------------------------------
// Verification campaigns.
// ---------------------------------------------------------------------------

enum class VerifyId { T1_1, T1_4, T1_7, T1_8, EquivalenceToughAlpha, EquivalenceStrict };
enum class SearchId { P1_5, P1_6 };

inline std::string to_string(VerifyId id) {
  switch (id) {
    case VerifyId::T1_1: return "1.1";
    case VerifyId::T1_4: return "1.4";
    case VerifyId::T1_7: return "1.7";
    case VerifyId::T1_8: return "1.8";
    case VerifyId::EquivalenceToughAlpha: return "equivalence-tough-alpha";
    case VerifyId::EquivalenceStrict: return "equivalence-strict";
  }
  return "?";
}
inline std::string to_string(SearchId id) { return id == SearchId::P1_5 ? "1.5" : "1.6"; }

inline std::optional<VerifyId> parse_verify_id(const std::string& s) {
  if (s == "1.1") return VerifyId::T1_1;
  if (s == "1.4") return VerifyId::T1_4;
  if (s == "1.7") return VerifyId::T1_7;
  if (s == "1.8") return VerifyId::T1_8;
  if (s == "equivalence-tough-alpha") return VerifyId::EquivalenceToughAlpha;
  if (s == "equivalence-strict") return VerifyId::EquivalenceStrict;
  return std::nullopt;
}
inline std::optional<SearchId> parse_search_id(const std::string& s) {
  if (s == "1.5") return SearchId::P1_5;
  if (s == "1.6") return SearchId::P1_6;
  return std::nullopt;
}

struct SourceSpec {
  int n_min = 1;
  int n_max = 8;
  Filters filters;
  bool sample_mode = false;
  int sample_count = 0;
  double edge_probability = 0.5;
  std::uint64_t seed = 0;
  bool include_petersen = false;
};

struct VerificationReport {
  std::string id;
  int k = 0;
  std::pair<int, int> n_range{0, 0};
  Filters filters;
  std::optional<std::uint64_t> seed;
  long long scanned = 0;
  long long hypotheses_ok = 0;
  long long conclusion_ok = 0;
  std::vector<std::string> exceptions;        // graph6
  std::vector<std::string> counterexamples;   // graph6
  long long runtime_ms = 0;
};

namespace detail {

struct GraphVerdict {
  bool hypotheses = false;
  bool conclusion = false;    // meaningful when hypotheses
  bool exceptional = false;   // counted separately, never a counterexample
};

inline std::vector<Graph> materialize(const SourceSpec& src) {
  std::vector<Graph> graphs;
  if (src.sample_mode) {
    std::mt19937_64 master(src.seed);
    for (int i = 0; i < src.sample_count; ++i) {
      int span = src.n_max - src.n_min + 1;
      int n = src.n_min + static_cast<int>(master() % static_cast<std::uint64_t>(span));
      std::uint64_t sub = master();
      Graph g = random_graph(n, src.edge_probability, sub);
      if (src.filters.pass(g)) graphs.push_back(std::move(g));
    }
  } else {
    if (src.n_max > kMaterializedCap)
      throw std::invalid_argument("verification campaigns enumerate up to n = 9");
    for (int n = std::max(1, src.n_min); n <= src.n_max; ++n)
      for (Graph& g : enumerate_graphs(n, src.filters).graphs()) graphs.push_back(std::move(g));
  }
  if (src.include_petersen) {
    Graph p = families::petersen();
    if (src.filters.pass(p)) graphs.push_back(std::move(p));
  }
  return graphs;
}

inline VerificationReport run_campaign(
    const std::string& id, int k, const SourceSpec& src,
    const std::function<GraphVerdict(const Graph&)>& judge, int jobs) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<Graph> graphs = materialize(src);
  VerificationReport rep;
  rep.id = id;
  rep.k = k;
  rep.n_range = {src.n_min, src.n_max};
  rep.filters = src.filters;
  if (src.sample_mode) rep.seed = src.seed;
  rep.scanned = static_cast<long long>(graphs.size());

  int workers = std::max(1, jobs);
  std::vector<long long> hyp(workers, 0), concl(workers, 0);
  std::vector<std::vector<std::string>> exc(workers), cex(workers);
  auto work = [&](int w) {
    for (std::size_t i = w; i < graphs.size(); i += workers) {
      GraphVerdict v = judge(graphs[i]);
      if (v.exceptional) exc[w].push_back(to_graph6(graphs[i]));
      if (!v.hypotheses) continue;
      ++hyp[w];
      if (v.conclusion)
        ++concl[w];
      else if (!v.exceptional)
        cex[w].push_back(to_graph6(graphs[i]));
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  auto collect = [&](std::vector<std::vector<std::string>>& parts) {
    std::vector<std::pair<std::string, std::string>> keyed;
    for (auto& part : parts)
      for (auto& s : part) keyed.emplace_back(canonical_form(from_graph6(s)), s);
    std::sort(keyed.begin(), keyed.end());
    std::vector<std::string> out;
    for (auto& [key, s] : keyed) out.push_back(s);
    return out;
  };
  for (int w = 0; w < workers; ++w) {
    rep.hypotheses_ok += hyp[w];
    rep.conclusion_ok += concl[w];
  }
  rep.exceptions = collect(exc);
  rep.counterexamples = collect(cex);
  rep.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return rep;
}

inline bool strictly_tougher_than_one(const Graph& g) {
  Toughness t = toughness(g);
  return t.infinite || t.value > Rational(1, 1);
}

}  // namespace detail

/// Classify every source graph against the named statement and count
/// hypotheses, conclusions, exceptional instances and counterexamples.
inline VerificationReport verify_theorem(VerifyId id, int k, const SourceSpec& src, int jobs = 1) {
  using detail::GraphVerdict;
  std::function<GraphVerdict(const Graph&)> judge;
  switch (id) {
    case VerifyId::T1_1:
      if (k != 2) throw std::invalid_argument("verify 1.1: k must be 2");
      judge = [](const Graph& g) {
        GraphVerdict v;
        if (g.order() < 3 || min_degree(g) < 2) return v;
        if (!is_pattern_free(g, 2)) return v;
        if (!is_t_tough(g, Rational(1, 1))) return v;
        v.hypotheses = true;
        v.conclusion = is_hamiltonian(g);
        return v;
      };
      break;
    case VerifyId::T1_4:
      if (k < 2) throw std::invalid_argument("verify 1.4: k must be >= 2");
      judge = [k](const Graph& g) {
        GraphVerdict v;
        Classification c = classify_instance(g, k, TheoremId::T1_4);
        v.hypotheses = c.hypotheses_ok;
        v.conclusion = c.conclusion_ok.value_or(false);
        v.exceptional = c.exceptional;
        return v;
      };
      break;
    case VerifyId::T1_7:
      if (k != 2) throw std::invalid_argument("verify 1.7: k must be 2");
      judge = [](const Graph& g) {
        GraphVerdict v;
        if (g.order() < 2) return v;
        if (!is_pattern_free(g, 2)) return v;
        if (!detail::strictly_tougher_than_one(g)) return v;
        v.hypotheses = true;
        v.conclusion = is_hamiltonian_connected(g).value;
        return v;
      };
      break;
    case VerifyId::T1_8:
      if (k < 2) throw std::invalid_argument("verify 1.8: k must be >= 2");
      judge = [k](const Graph& g) {
        GraphVerdict v;
        Classification c = classify_instance(g, k, TheoremId::T1_8);
        v.hypotheses = c.hypotheses_ok;
        v.conclusion = c.conclusion_ok.value_or(false);
        return v;
      };
      break;
    case VerifyId::EquivalenceToughAlpha:
      if (k < 2) throw std::invalid_argument("verify equivalence: k must be >= 2");
      judge = [k](const Graph& g) {
        GraphVerdict v;
        if (g.order() < 1 || vertex_connectivity(g) < k) return v;
        if (!is_pattern_free(g, k)) return v;
        v.hypotheses = true;
        bool alpha_side = 2 * independence_number(g).value <= g.order();
        bool tough_side = is_t_tough(g, Rational(1, 1));
        v.conclusion = alpha_side == tough_side;
        return v;
      };
      break;
    case VerifyId::EquivalenceStrict:
      if (k < 2) throw std::invalid_argument("verify equivalence: k must be >= 2");
      judge = [k](const Graph& g) {
        GraphVerdict v;
        if (g.order() < 1 || vertex_connectivity(g) < k + 1) return v;
        if (!is_pattern_free(g, k)) return v;
        v.hypotheses = true;
        bool alpha_side = 2 * independence_number(g).value < g.order();
        bool tough_side = detail::strictly_tougher_than_one(g);
        v.conclusion = alpha_side == tough_side;
        return v;
      };
      break;
  }
  return detail::run_campaign(to_string(id), k, src, judge, jobs);
}

/// Counterexample search in the window left open by the statements: the
/// problem hypotheses hold but the minimum degree falls short of the proved
/// bound. Finding nothing is the expected (reportable) outcome.
inline VerificationReport search_problem(SearchId id, int k, const SourceSpec& src, int jobs = 1) {
  if (k < 2) throw std::invalid_argument("search: k must be >= 2");
  using detail::GraphVerdict;
  std::function<GraphVerdict(const Graph&)> judge;
  if (id == SearchId::P1_5) {
    int window_lo = k, window_hi = (3 * k - 2) / 2 - 1;  // ceil(3(k-1)/2) - 1
    judge = [k, window_lo, window_hi](const Graph& g) {
      GraphVerdict v;
      if (g.order() < 3) return v;
      if (vertex_connectivity(g) < k) return v;
      if (!is_pattern_free(g, k)) return v;
      if (!is_t_tough(g, Rational(1, 1))) return v;
      if (is_petersen(g)) {
        v.exceptional = true;  // excluded by the problem statement itself
        return v;
      }
      int delta = min_degree(g);
      if (delta < window_lo || delta > window_hi) return v;
      v.hypotheses = true;
      v.conclusion = is_hamiltonian(g);
      return v;
    };
  } else {
    int window_lo = k + 1, window_hi = (3 * k) / 2 - 1;  // ceil((3k-1)/2) - 1
    judge = [k, window_lo, window_hi](const Graph& g) {
      GraphVerdict v;
      if (g.order() < 2) return v;
      if (vertex_connectivity(g) < k + 1) return v;
      if (!is_pattern_free(g, k)) return v;
      if (!detail::strictly_tougher_than_one(g)) return v;
      int delta = min_degree(g);
      if (delta < window_lo || delta > window_hi) return v;
      v.hypotheses = true;
      v.conclusion = is_hamiltonian_connected(g).value;
      return v;
    };
  }
  return detail::run_campaign(to_string(id), k, src, judge, jobs);
}

// ---------------------------------------------------------------------------
// JSON reports: stable key order, witnesses as graph6.
// ---------------------------------------------------------------------------

inline nlohmann::ordered_json report_to_json(const VerificationReport& rep) {
  nlohmann::ordered_json j;
  j["id"] = rep.id;
  j["k"] = rep.k;
  j["n_range"] = {rep.n_range.first, rep.n_range.second};
  nlohmann::ordered_json f;
  f["connected_only"] = rep.filters.connected_only;
  f["min_degree"] = rep.filters.min_degree ? nlohmann::ordered_json(*rep.filters.min_degree)
                                           : nlohmann::ordered_json(nullptr);
  f["min_connectivity"] = rep.filters.min_connectivity
                              ? nlohmann::ordered_json(*rep.filters.min_connectivity)
                              : nlohmann::ordered_json(nullptr);
  j["filters"] = f;
  j["seed"] = rep.seed ? nlohmann::ordered_json(*rep.seed) : nlohmann::ordered_json(nullptr);
  j["scanned"] = rep.scanned;
  j["hypotheses_ok"] = rep.hypotheses_ok;
  j["conclusion_ok"] = rep.conclusion_ok;
  j["exceptions"] = rep.exceptions;
  j["counterexamples"] = rep.counterexamples;
  j["runtime_ms"] = rep.runtime_ms;
  return j;
}

inline void write_report(const VerificationReport& rep, std::ostream& out) {
  // every embedded witness must survive a reload
  for (const auto& s : rep.exceptions)
    if (to_graph6(from_graph6(s)) != s) throw std::logic_error("write_report: witness mangled");
  for (const auto& s : rep.counterexamples)
    if (to_graph6(from_graph6(s)) != s) throw std::logic_error("write_report: witness mangled");
  out << report_to_json(rep).dump(2) << "\n";
}

}  // namespace hamfree::harness
