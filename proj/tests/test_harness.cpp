#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "hamfree/families.hpp"
#include "hamfree/harness.hpp"
#include "hamfree/isomorphism.hpp"
#include "oracles.hpp"

using namespace hamfree;
using harness::Filters;
using harness::SourceSpec;

TEST_CASE("enumeration counts match the labeled-dedup oracle") {
  long long expected[] = {0, 1, 2, 4, 11, 34};
  for (int n = 1; n <= 5; ++n) {
    auto graphs = harness::enumerate_graphs(n).graphs();
    CHECK(static_cast<long long>(graphs.size()) == expected[n]);
    CHECK(oracles::count_classes_labeled(n) == expected[n]);
  }
}

TEST_CASE("enumeration is complete by orbit counting") {
  // sum over classes of n!/|Aut| must equal the number of labeled graphs
  long long factorial[] = {1, 1, 2, 6, 24, 120, 720, 5040};
  for (int n = 4; n <= 7; ++n) {
    long long labeled = 0;
    for (const Graph& g : harness::enumerate_graphs(n).graphs())
      labeled += factorial[n] / oracles::automorphism_count(g);
    CHECK(labeled == (1LL << (n * (n - 1) / 2)));
  }
}

TEST_CASE("enumeration counts at n = 6 and 7") {
  CHECK(harness::enumerate_graphs(6).graphs().size() == 156);
  CHECK(harness::enumerate_graphs(7).graphs().size() == 1044);
}

TEST_CASE("enumeration determinism and filters") {
  auto a = harness::enumerate_graphs(5).graphs();
  auto b = harness::enumerate_graphs(5).graphs();
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);

  Filters connected;
  connected.connected_only = true;
  long long manual = 0;
  for (const Graph& g : a)
    if (is_connected(g)) ++manual;
  CHECK(static_cast<long long>(harness::enumerate_graphs(5, connected).graphs().size()) == manual);

  Filters deg;
  deg.min_degree = 2;
  for (const Graph& g : harness::enumerate_graphs(5, deg).graphs()) CHECK(min_degree(g) >= 2);

  CHECK_THROWS_AS(harness::enumerate_graphs(0), std::invalid_argument);
  CHECK_THROWS_AS(harness::enumerate_graphs(11), std::invalid_argument);

  // the n = 10 level exists but only streams; materializing it is refused
  CHECK_NOTHROW(harness::enumerate_graphs(10));
  CHECK_THROWS_AS(harness::enumerate_graphs(10).graphs(), std::invalid_argument);
}

TEST_CASE("random_graph determinism contract") {
  CHECK(harness::random_graph(6, 0.0, 7).size() == 0);
  CHECK(harness::random_graph(6, 1.0, 7).size() == 15);
  Graph a = harness::random_graph(8, 0.5, 12345);
  Graph b = harness::random_graph(8, 0.5, 12345);
  CHECK(a == b);
  CHECK_FALSE(a == harness::random_graph(8, 0.5, 12346));
  CHECK_THROWS_AS(harness::random_graph(4, 1.5, 0), std::invalid_argument);
}

TEST_CASE("verify 1.1 over the small stream") {
  SourceSpec src;
  src.n_min = 1;
  src.n_max = 7;
  auto rep = harness::verify_theorem(harness::VerifyId::T1_1, 2, src);
  CHECK(rep.counterexamples.empty());
  CHECK(rep.hypotheses_ok > 0);
  CHECK(rep.hypotheses_ok == rep.conclusion_ok);

  auto rep3 = harness::verify_theorem(harness::VerifyId::T1_1, 2, src, 3);
  CHECK(rep3.scanned == rep.scanned);
  CHECK(rep3.hypotheses_ok == rep.hypotheses_ok);
  CHECK(rep3.conclusion_ok == rep.conclusion_ok);
  CHECK(rep3.exceptions == rep.exceptions);
  CHECK(rep3.counterexamples == rep.counterexamples);
}

TEST_CASE("verify 1.4 marks the Petersen graph as the lone exception") {
  SourceSpec src;
  src.n_max = 6;
  src.include_petersen = true;
  auto rep = harness::verify_theorem(harness::VerifyId::T1_4, 3, src);
  CHECK(rep.counterexamples.empty());
  REQUIRE(rep.exceptions.size() == 1);
  CHECK(is_petersen(from_graph6(rep.exceptions[0])));
}

TEST_CASE("equivalence campaigns hold on the small stream") {
  SourceSpec src;
  src.n_max = 6;
  for (int k : {2, 3}) {
    auto a = harness::verify_theorem(harness::VerifyId::EquivalenceToughAlpha, k, src);
    CHECK(a.counterexamples.empty());
    CHECK(a.hypotheses_ok == a.conclusion_ok);
    auto s = harness::verify_theorem(harness::VerifyId::EquivalenceStrict, k, src);
    CHECK(s.counterexamples.empty());
    CHECK(s.hypotheses_ok == s.conclusion_ok);
  }
}

TEST_CASE("search problems report empty windows and exceptions") {
  SourceSpec src;
  src.n_max = 6;
  auto k3 = harness::search_problem(harness::SearchId::P1_5, 3, src);
  CHECK(k3.hypotheses_ok == 0);  // the k = 3 window is empty
  CHECK(k3.counterexamples.empty());

  src.include_petersen = true;
  auto with_pet = harness::search_problem(harness::SearchId::P1_5, 3, src);
  REQUIRE(with_pet.exceptions.size() == 1);
  CHECK(is_petersen(from_graph6(with_pet.exceptions[0])));
  CHECK(with_pet.counterexamples.empty());

  SourceSpec sample;
  sample.sample_mode = true;
  sample.sample_count = 50;
  sample.n_min = 6;
  sample.n_max = 9;
  sample.seed = 99;
  auto p16 = harness::search_problem(harness::SearchId::P1_6, 3, sample);
  CHECK(p16.counterexamples.empty());
  CHECK(p16.seed == std::optional<std::uint64_t>(99));
}

TEST_CASE("invalid id and k combinations are rejected") {
  SourceSpec src;
  src.n_max = 4;
  CHECK_THROWS_AS(harness::verify_theorem(harness::VerifyId::T1_1, 3, src), std::invalid_argument);
  CHECK_THROWS_AS(harness::verify_theorem(harness::VerifyId::T1_7, 4, src), std::invalid_argument);
  CHECK_THROWS_AS(harness::verify_theorem(harness::VerifyId::T1_4, 1, src), std::invalid_argument);
  CHECK_THROWS_AS(harness::search_problem(harness::SearchId::P1_5, 1, src), std::invalid_argument);
  CHECK_FALSE(harness::parse_verify_id("9.9").has_value());
}

TEST_CASE("reports serialize with stable keys and reload cleanly") {
  SourceSpec src;
  src.n_max = 5;
  src.include_petersen = true;
  auto rep = harness::verify_theorem(harness::VerifyId::T1_4, 3, src);
  rep.runtime_ms = 0;  // the comparable body excludes wall time
  std::ostringstream out1, out2;
  harness::write_report(rep, out1);
  harness::write_report(rep, out2);
  CHECK(out1.str() == out2.str());

  auto j = nlohmann::ordered_json::parse(out1.str());
  auto keys = std::vector<std::string>{};
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"id", "k", "n_range", "filters", "seed", "scanned",
                                         "hypotheses_ok", "conclusion_ok", "exceptions",
                                         "counterexamples", "runtime_ms"});
  CHECK(j["id"] == "1.4");
  CHECK(j["seed"].is_null());
  CHECK(j["counterexamples"].size() == 0);
  REQUIRE(j["exceptions"].size() == 1);
  Graph reloaded = from_graph6(j["exceptions"][0].get<std::string>());
  CHECK(is_petersen(reloaded));

  // an identical second run produces an identical comparable body
  auto rep2 = harness::verify_theorem(harness::VerifyId::T1_4, 3, src);
  rep2.runtime_ms = 0;
  std::ostringstream out3;
  harness::write_report(rep2, out3);
  CHECK(out3.str() == out1.str());
}
