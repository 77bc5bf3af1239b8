// hamfree: exact solvers, class recognition, extremal families and theorem
// verification for hamiltonicity questions on (K2 u kK1)-free graphs.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hamfree/class_recognition.hpp"
#include "hamfree/families.hpp"
#include "hamfree/formats.hpp"
#include "hamfree/graph.hpp"
#include "hamfree/harness.hpp"
#include "hamfree/invariants.hpp"
#include "hamfree/isomorphism.hpp"
#include "hamfree/proof_engine.hpp"

namespace {

using namespace hamfree;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitHamiltonian = 3;
constexpr int kExitExceptional = 4;
constexpr int kExitHypothesis = 5;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (ss.str().empty()) throw ParseError(path + " is empty");
  return ss.str();
}

Graph load_graph(const std::string& path, const std::string& format) {
  std::string text = slurp(path);
  if (format == "el") return parse_edge_list(text);
  if (format == "g6") {
    std::string t = text;
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
    return from_graph6(t);
  }
  return parse_graph_auto(text);
}

void emit_graph(const Graph& g, const std::string& format, std::ostream& out) {
  if (format == "el")
    write_edge_list(out, g);
  else
    out << to_graph6(g) << "\n";
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<int>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(vs[i]);
  }
  return s;
}

int run_check(const std::string& path, const std::string& format, int k) {
  Graph g = load_graph(path, format);
  std::cout << "n = " << g.order() << "\n";
  std::cout << "m = " << g.size() << "\n";
  if (g.order() == 0) {
    std::cout << "empty graph\n";
    return kExitOk;
  }
  std::cout << "min_degree = " << min_degree(g) << "\n";
  std::cout << "connectivity = " << vertex_connectivity(g) << "\n";
  auto alpha = independence_number(g);
  std::cout << "independence_number = " << alpha.value << "\n";
  Toughness t = toughness(g);
  std::cout << "toughness = " << t.str();
  if (!t.infinite && !is_connected(g)) std::cout << " (disconnected)";
  std::cout << "\n";
  std::cout << "freeness_threshold = " << freeness_threshold(g).value << "\n";
  bool ham = g.order() >= 3 && is_hamiltonian(g);
  std::cout << "hamiltonian = " << yesno(ham) << "\n";
  if (k >= 2) {
    for (TheoremId id : {TheoremId::T1_4, TheoremId::T1_8}) {
      Classification c = classify_instance(g, k, id);
      const char* name = id == TheoremId::T1_4 ? "1.4" : "1.8";
      std::cout << "hypotheses " << name << " (k=" << k << "):";
      auto field = [&](const char* label, const std::optional<bool>& v) {
        std::cout << " " << label << "=" << (v ? yesno(*v) : std::string("-"));
      };
      field("degree", c.degree_ok);
      field("connectivity", c.connectivity_ok);
      field("freeness", c.freeness_ok);
      field("bound", c.bound_ok);
      std::cout << " => " << (c.hypotheses_ok ? "hold" : "fail (" + c.first_failed + ")") << "\n";
      if (c.hypotheses_ok && id == TheoremId::T1_4 && !ham && is_petersen(g))
        std::cout << "exceptional: Petersen\n";
    }
  }
  return kExitOk;
}

int run_gen(const std::string& family, std::vector<int> params, const std::string& format) {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw std::invalid_argument("gen " + family + ": expected " + std::to_string(count) +
                                  " parameter(s)");
  };
  Graph g;
  if (family == "petersen") {
    need(0);
    g = families::petersen();
  } else if (family == "complete") {
    need(1);
    g = families::complete(params[0]);
  } else if (family == "cycle") {
    need(1);
    g = families::cycle(params[0]);
  } else if (family == "path") {
    need(1);
    g = families::path(params[0]);
  } else if (family == "kbipartite" || family == "complete_bipartite") {
    need(2);
    g = families::complete_bipartite(params[0], params[1]);
  } else if (family == "gfamily" || family == "g_family") {
    need(2);
    g = families::g_family(params[0], params[1]).graph;
  } else if (family == "pattern") {
    need(1);
    g = families::pattern(params[0]);
  } else {
    throw std::invalid_argument("gen: unknown family " + family);
  }
  emit_graph(g, format.empty() ? "g6" : format, std::cout);
  return kExitOk;
}

struct CampaignArgs {
  int k = 2;
  int n_min = 1;
  int n_max = 8;
  bool long_run = false;
  int sample = 0;
  std::uint64_t seed = 0;
  bool seed_set = false;
  double p = 0.5;
  bool with_petersen = false;
  bool connected_only = false;
  int jobs = 1;
  std::string out_path;
};

harness::SourceSpec build_source(const CampaignArgs& a, bool sample_mode) {
  harness::SourceSpec src;
  src.filters.connected_only = a.connected_only;
  src.include_petersen = a.with_petersen;
  if (sample_mode) {
    if (!a.seed_set)
      throw std::invalid_argument("sampled runs require an explicit --seed");
    src.sample_mode = true;
    src.sample_count = a.sample;
    src.seed = a.seed;
    src.edge_probability = a.p;
    src.n_min = a.n_min == 1 ? 5 : a.n_min;  // sampling default range 5..12
    src.n_max = a.n_max == 8 ? 12 : a.n_max;
  } else {
    src.n_min = a.n_min;
    src.n_max = a.n_max;
    int cap = a.long_run ? 9 : 8;
    if (src.n_max > cap)
      throw std::invalid_argument("exhaustive runs cap at n = " + std::to_string(cap) +
                                  (a.long_run ? "" : " (pass --long-run for n = 9)"));
  }
  return src;
}

int emit_report(const harness::VerificationReport& rep, const std::string& out_path) {
  if (out_path.empty()) {
    harness::write_report(rep, std::cout);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + out_path);
    harness::write_report(rep, out);
  }
  std::cerr << "scanned " << rep.scanned << ", hypotheses_ok " << rep.hypotheses_ok
            << ", conclusion_ok " << rep.conclusion_ok << ", exceptions "
            << rep.exceptions.size() << ", counterexamples " << rep.counterexamples.size()
            << "\n";
  return rep.counterexamples.empty() ? kExitOk : kExitCounterexample;
}

int run_witness(const std::string& path, const std::string& format, int k,
                const std::string& mode, int a, int b) {
  Graph g = load_graph(path, format);
  WitnessOutcome res;
  if (mode == "cycle") {
    res = witness_independent_set(g, k);
  } else if (mode == "path") {
    if (a < 0 || b < 0) throw std::invalid_argument("path mode needs --a and --b");
    res = witness_independent_set(g, k, a, b);
  } else {
    throw std::invalid_argument("witness: mode must be cycle or path");
  }
  switch (res.status) {
    case WitnessOutcome::Status::Ok: {
      auto vs = res.independent_set.to_vector();
      std::cout << "independent set: " << join(vs) << "\n";
      double half = g.order() / 2.0;
      std::cout << "size " << vs.size() << (mode == "cycle" ? " > " : " >= ") << half << "\n";
      return kExitOk;
    }
    case WitnessOutcome::Status::Hamiltonian:
    case WitnessOutcome::Status::SpanningPathExists:
      std::cout << res.detail << "\n";
      return kExitHamiltonian;
    case WitnessOutcome::Status::Exceptional:
      std::cout << "exceptional: " << res.detail << "\n";
      return kExitExceptional;
    case WitnessOutcome::Status::HypothesisFailure:
      std::cout << "hypothesis failure: " << res.detail << "\n";
      return kExitHypothesis;
  }
  return kExitUsage;
}

int run_extend(const std::string& graph_path, const std::string& cycle_path,
               const std::string& format, int k) {
  Graph g = load_graph(graph_path, format);
  std::vector<int> seq;
  {
    std::istringstream in(slurp(cycle_path));
    int v;
    while (in >> v) seq.push_back(v);
  }
  OrientedCycle cycle;
  try {
    cycle = OrientedCycle(g, seq);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid cycle: ") + e.what());
  }
  VertexSet on = cycle.vertex_set(g.order());
  VertexSet off = on.complement();
  if (off.empty()) throw ParseError("no outside vertex: the cycle is spanning");

  // components first: a rotation violation already rebuilds a longer cycle
  for (auto& rep : check_component_trivial(g, cycle)) {
    auto violations = rotation_violations(g, cycle, rep.vertices);
    if (!violations.empty()) {
      std::cout << "longer cycle: " << join(violations.front().longer) << "\n";
      return kExitOk;
    }
    if (!rep.trivial) {
      VertexSet succs = cycle.successors(neighborhood_of_set(g, rep.vertices));
      if (auto w = component_freeness_witness(g, succs, rep.vertices, k)) {
        std::cout << "freeness violation: " << join(w->to_vector()) << "\n";
        return kExitOk;
      }
      std::cout << "component { " << join(rep.vertices.to_vector())
                << " } is not trivial; no rebuild applies\n";
      return kExitOk;
    }
  }
  int x = off.first();
  auto cfg = build_outside_configuration(g, cycle, x, k);
  if (cfg.status == ConfigurationOutcome::Status::LongerFound) {
    std::cout << "longer cycle: " << join(cfg.longer) << "\n";
    return kExitOk;
  }
  if (cfg.status != ConfigurationOutcome::Status::Ok) {
    std::cout << "no configuration: " << cfg.detail << "\n";
    return kExitOk;
  }
  auto alt = analyze_alternation(g, cfg.config, k);
  switch (alt.kind) {
    case AlternationOutcome::Kind::LongerCycle:
      std::cout << "longer cycle: " << join(alt.longer) << "\n";
      break;
    case AlternationOutcome::Kind::Alternating:
      std::cout << "alternating; N(X) on cycle: " << join(alt.neighborhood_set.to_vector())
                << "\n";
      break;
    case AlternationOutcome::Kind::PetersenDetected:
      std::cout << "Petersen detected: " << alt.detail << "\n";
      break;
    case AlternationOutcome::Kind::FreenessViolation:
      std::cout << "freeness violation: " << join(alt.freeness_witness.to_vector()) << "\n";
      break;
    case AlternationOutcome::Kind::Unresolved:
      std::cout << "unresolved: " << alt.detail << "\n";
      break;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact hamiltonicity toolkit for (K2 u kK1)-free graphs"};
  app.require_subcommand(1);

  // check
  std::string check_path, check_format;
  int check_k = 0;
  auto* check = app.add_subcommand("check", "print exact invariants and hypothesis status");
  check->add_option("input", check_path, "graph file (edge list or graph6)")->required();
  check->add_option("--k", check_k, "freeness parameter for the hypothesis report");
  check->add_option("--format", check_format, "force input format: el or g6");

  // gen
  std::string gen_family, gen_format = "g6";
  std::vector<int> gen_params;
  auto* gen = app.add_subcommand("gen", "emit a named family graph");
  gen->add_option("family", gen_family,
                  "petersen | complete | cycle | path | kbipartite | gfamily | pattern")
      ->required();
  gen->add_option("params", gen_params, "integer parameters");
  gen->add_option("--format", gen_format, "g6 (default) or el");

  // verify / search share flags
  CampaignArgs va, sa;
  std::string verify_id, search_id;
  auto* verify = app.add_subcommand("verify", "verify a statement over enumerated or sampled graphs");
  verify->add_option("id", verify_id,
                     "1.1 | 1.4 | 1.7 | 1.8 | equivalence-tough-alpha | equivalence-strict")
      ->required();
  auto add_campaign_flags = [](CLI::App* cmd, CampaignArgs& a) {
    cmd->add_option("--k", a.k, "freeness parameter")->required();
    cmd->add_option("--n-min", a.n_min, "smallest order");
    cmd->add_option("--n-max", a.n_max, "largest order (enumeration default 8, cap 9)");
    cmd->add_flag("--long-run", a.long_run, "allow the hours-scale n = 9 exhaustive run");
    cmd->add_option("--sample", a.sample, "sampled mode: number of random graphs");
    cmd->add_option("--seed", a.seed, "seed for sampled mode (required there)")
        ->each([&a](const std::string&) { a.seed_set = true; });
    cmd->add_option("--p", a.p, "edge probability for sampled mode (default 0.5)");
    cmd->add_flag("--with-petersen", a.with_petersen, "append the Petersen graph to the source");
    cmd->add_flag("--connected-only", a.connected_only, "filter to connected graphs");
    cmd->add_option("--jobs", a.jobs, "worker threads (default 1)");
    cmd->add_option("-o,--out", a.out_path, "report file (default: stdout)");
  };
  add_campaign_flags(verify, va);

  auto* search = app.add_subcommand("search", "scan the open window of a problem for counterexamples");
  search->add_option("id", search_id, "1.5 | 1.6")->required();
  add_campaign_flags(search, sa);

  // witness
  std::string wit_path, wit_format, wit_mode = "cycle";
  int wit_k = 2, wit_a = -1, wit_b = -1;
  auto* wit = app.add_subcommand("witness", "extract the contrapositive independent set");
  wit->add_option("input", wit_path, "graph file")->required();
  wit->add_option("--k", wit_k, "freeness parameter")->required();
  wit->add_option("--mode", wit_mode, "cycle (default) or path");
  wit->add_option("--a", wit_a, "path mode: first endpoint");
  wit->add_option("--b", wit_b, "path mode: second endpoint");
  wit->add_option("--format", wit_format, "force input format: el or g6");

  // extend
  std::string ext_graph, ext_cycle, ext_format;
  int ext_k = 2;
  auto* ext = app.add_subcommand("extend", "try the rewrite catalogue against a given cycle");
  ext->add_option("input", ext_graph, "graph file")->required();
  ext->add_option("cycle", ext_cycle, "file listing the cycle's vertices in order")->required();
  ext->add_option("--k", ext_k, "freeness parameter")->required();
  ext->add_option("--format", ext_format, "force input format: el or g6");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*check) return run_check(check_path, check_format, check_k);
    if (*gen) return run_gen(gen_family, gen_params, gen_format);
    if (*verify) {
      auto id = harness::parse_verify_id(verify_id);
      if (!id) throw std::invalid_argument("unknown statement id " + verify_id);
      auto src = build_source(va, va.sample > 0);
      auto rep = harness::verify_theorem(*id, va.k, src, va.jobs);
      return emit_report(rep, va.out_path);
    }
    if (*search) {
      auto id = harness::parse_search_id(search_id);
      if (!id) throw std::invalid_argument("unknown problem id " + search_id);
      auto src = build_source(sa, sa.sample > 0);
      auto rep = harness::search_problem(*id, sa.k, src, sa.jobs);
      return emit_report(rep, sa.out_path);
    }
    if (*wit) return run_witness(wit_path, wit_format, wit_k, wit_mode, wit_a, wit_b);
    if (*ext) return run_extend(ext_graph, ext_cycle, ext_format, ext_k);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
