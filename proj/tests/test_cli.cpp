#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "hamfree/families.hpp"
#include "hamfree/formats.hpp"
#include "hamfree/invariants.hpp"
#include "hamfree/isomorphism.hpp"

using namespace hamfree;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

const char* cli_path() { return std::getenv("HAMFREE_CLI"); }

RunResult run(const std::string& args) {
  std::string cmd = std::string(cli_path()) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) res.out.append(buf, got);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string tmp_file(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/hamfree_cli_") + name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

}  // namespace

#define REQUIRE_CLI() \
  if (!cli_path()) SKIP("HAMFREE_CLI not set")

TEST_CASE("cli: gen emits reloadable graphs") {
  REQUIRE_CLI();
  auto pet = run("gen petersen");
  CHECK(pet.exit_code == 0);
  std::string g6 = pet.out.substr(0, pet.out.find('\n'));
  CHECK(is_petersen(from_graph6(g6)));

  auto fam = run("gen gfamily 4 1 --format el");
  CHECK(fam.exit_code == 0);
  Graph g = parse_edge_list(fam.out);
  CHECK(g.order() == 9);
  CHECK(g.size() == 20);

  auto kb = run("gen kbipartite 3 4");
  CHECK(kb.exit_code == 0);
  CHECK(are_isomorphic(from_graph6(kb.out.substr(0, kb.out.find('\n'))),
                       families::complete_bipartite(3, 4)));

  CHECK(run("gen gfamily 1").exit_code == 2);
  CHECK(run("gen nosuch 3").exit_code == 2);
}

TEST_CASE("cli: check reports invariants and the exceptional instance") {
  REQUIRE_CLI();
  std::string pet = tmp_file("petersen.g6", to_graph6(families::petersen()) + "\n");
  auto res = run("check " + pet + " --k 3");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("n = 10") != std::string::npos);
  CHECK(res.out.find("toughness = 4/3") != std::string::npos);
  CHECK(res.out.find("freeness_threshold = 3") != std::string::npos);
  CHECK(res.out.find("hamiltonian = no") != std::string::npos);
  CHECK(res.out.find("=> hold") != std::string::npos);
  CHECK(res.out.find("exceptional: Petersen") != std::string::npos);

  std::string k23 = tmp_file("k23.el", to_edge_list(families::complete_bipartite(2, 3)));
  auto res2 = run("check " + k23 + " --k 2");
  CHECK(res2.exit_code == 0);
  CHECK(res2.out.find("toughness = 2/3") != std::string::npos);
  CHECK(res2.out.find("bound=no") != std::string::npos);

  std::string empty = tmp_file("empty", "");
  CHECK(run("check " + empty + " --k 2").exit_code == 2);
}

TEST_CASE("cli: verify writes reports and honors exit codes") {
  REQUIRE_CLI();
  auto ok = run("verify 1.1 --k 2 --n-max 5 -o /tmp/hamfree_cli_report.json");
  CHECK(ok.exit_code == 0);
  std::ifstream in("/tmp/hamfree_cli_report.json");
  std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(body.find("\"counterexamples\": []") != std::string::npos);

  CHECK(run("verify 9.9 --k 2").exit_code == 2);
  CHECK(run("verify 1.1 --k 3 --n-max 4").exit_code == 2);
  CHECK(run("verify 1.4 --k 3 --n-max 9").exit_code == 2);  // needs --long-run
  CHECK(run("verify 1.4 --k 3 --sample 5").exit_code == 2);  // sampling demands a seed

  auto pet = run("verify 1.4 --k 3 --n-max 4 --with-petersen");
  CHECK(pet.exit_code == 0);
  CHECK(pet.out.find("\"exceptions\"") != std::string::npos);

  auto sampled1 = run("verify 1.4 --k 3 --sample 25 --seed 7");
  auto sampled2 = run("verify 1.4 --k 3 --sample 25 --seed 7");
  CHECK(sampled1.exit_code == 0);
  // identical seeds give identical comparable bodies
  auto strip_runtime = [](std::string s) {
    auto pos = s.find("\"runtime_ms\"");
    return pos == std::string::npos ? s : s.substr(0, pos);
  };
  CHECK(strip_runtime(sampled1.out) == strip_runtime(sampled2.out));
}

TEST_CASE("cli: search reports the open window") {
  REQUIRE_CLI();
  auto res = run("search 1.5 --k 4 --n-max 5");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("\"id\": \"1.5\"") != std::string::npos);
  CHECK(run("search 1.9 --k 4").exit_code == 2);
}

TEST_CASE("cli: witness exit codes") {
  REQUIRE_CLI();
  std::string k23 = tmp_file("w_k23.el", to_edge_list(families::complete_bipartite(2, 3)));
  auto ok = run("witness " + k23 + " --k 2");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("independent set: 2 3 4") != std::string::npos);
  CHECK(ok.out.find("3 > 2.5") != std::string::npos);

  std::string c6 = tmp_file("w_c6.el", to_edge_list(families::cycle(6)));
  CHECK(run("witness " + c6 + " --k 2").exit_code == 3);

  std::string pet = tmp_file("w_pet.g6", to_graph6(families::petersen()) + "\n");
  CHECK(run("witness " + pet + " --k 3").exit_code == 4);

  CHECK(run("witness " + k23 + " --k 3").exit_code == 5);

  std::string k34 = tmp_file("w_k34.el", to_edge_list(families::complete_bipartite(3, 4)));
  auto path_mode = run("witness " + k34 + " --k 2 --mode path --a 0 --b 1");
  CHECK(path_mode.exit_code == 0);
  CHECK(path_mode.out.find("4 >= 3.5") != std::string::npos);
  CHECK(run("witness " + k34 + " --k 2 --mode path --a 3 --b 4").exit_code == 3);
}

TEST_CASE("cli: extend") {
  REQUIRE_CLI();
  std::string k7 = tmp_file("x_k7.el", to_edge_list(families::complete(7)));
  std::string hexagon = tmp_file("x_hex.cycle", "0 1 2 3 4 5\n");
  auto res = run("extend " + k7 + " " + hexagon + " --k 2");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("longer cycle:") != std::string::npos);

  std::string pet = tmp_file("x_pet.g6", to_graph6(families::petersen()) + "\n");
  auto nine = longest_cycle(families::petersen());
  std::string nine_line;
  for (int v : nine->vertices()) nine_line += std::to_string(v) + " ";
  std::string ninef = tmp_file("x_nine.cycle", nine_line + "\n");
  auto pres = run("extend " + pet + " " + ninef + " --k 3");
  CHECK(pres.exit_code == 0);
  CHECK(pres.out.find("Petersen detected") != std::string::npos);

  std::string c5 = tmp_file("x_c5.el", to_edge_list(families::cycle(5)));
  std::string c5cycle = tmp_file("x_c5.cycle", "0 1 2 3 4\n");
  CHECK(run("extend " + c5 + " " + c5cycle + " --k 2").exit_code == 2);

  std::string bad = tmp_file("x_bad.cycle", "0 1 3\n");
  CHECK(run("extend " + c5 + " " + bad + " --k 2").exit_code == 2);
}
