#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "knotdom/cli.hpp"

using namespace knotdom;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  args.insert(args.begin(), {"--corpus", KNOTDOM_CORPUS_PATH});
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("check exit codes and rendering") {
  auto r = run({"check", "granny", "3_1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "Certified"));
  CHECK(contains(r.out, "C1"));

  r = run({"check", "4_1", "3_1"});
  CHECK(r.code == 2);
  CHECK(contains(r.out, "O1"));
  CHECK(contains(r.out, "R2"));
  CHECK(contains(r.out, "1 - 3t + t^2"));

  r = run({"check", "double_of_3_1", "sat_of_double_of_3_1"});
  CHECK(r.code == 3);
  CHECK(contains(r.out, "Unknown"));

  r = run({"check", "3_1", "trefoil_alt_diagram"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "Equal"));

  r = run({"check", "nosuch", "3_1"});
  CHECK(r.code == 1);
  CHECK(contains(r.err, "nosuch"));

  r = run({"--json", "check", "KT_mutant", "Conway_mutant"});
  CHECK(r.code == 2);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "Obstructed");
  CHECK(j["rules"] == nlohmann::json({"O2", "O11", "R5", "R6"}));
  // Flags after the subcommand work too.
  CHECK(run({"check", "granny", "3_1", "--json"}).out == run({"--json", "check", "granny", "3_1"}).out);
}

TEST_CASE("invariants of names, PD codes and braids") {
  auto r = run({"invariants", "4_1"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "alexander: 1 - 3t + t^2"));
  CHECK(contains(r.out, "determinant: 5"));

  r = run({"invariants", "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "jones: -t^-4 + t^-3 + t^-1"));
  CHECK(contains(r.out, "seifert circles: 2"));

  r = run({"--json", "invariants", "B2: 1 1 1 1 1"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["delta"] == "1 - t + t^2 - t^3 + t^4");

  CHECK(run({"invariants", "B2: 1 -1"}).code == 1);
  CHECK(run({"invariants", "X(1,2,3)"}).code == 1);
  CHECK(run({"invariants", "nosuch"}).code == 1);
}

TEST_CASE("verify-paper") {
  auto r = run({"verify-paper"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "8/8 checks passed"));
  r = run({"--json", "verify-paper"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["checks"].size() == 8);
  const char* ids[] = {"alexander_reproduction", "band_sum_nondivisibility", "murasugi_sum_nondivisibility",
                       "cable_satellite_formula", "jones_nondivisibility",     "winding_zero_satellite",
                       "pair_verdicts",          "chain_bounds"};
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(j["checks"][i]["id"] == ids[i]);
    CHECK(j["checks"][i]["pass"] == true);
  }
  CHECK(r.out == run({"--json", "verify-paper"}).out);

  std::ostringstream out, err;
  CHECK(run_cli({"--corpus", "/nonexistent/corpus.json", "verify-paper"}, out, err) == 1);
  CHECK(contains(err.str(), "/nonexistent/corpus.json"));
}

TEST_CASE("poset and chain-bound") {
  auto r = run({"--json", "poset"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["audit_log"].empty());
  CHECK(j["longest_chains"]["granny"] == nlohmann::json({"granny", "3_1", "unknot"}));
  CHECK(r.out == run({"--json", "--threads", "4", "poset"}).out);
  CHECK(run({"poset", KNOTDOM_CORPUS_PATH}).code == 0);
  CHECK(run({"poset", "/nonexistent.json"}).code == 1);

  r = run({"chain-bound", "5_2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "alternating_degree <= 2 (alternating_count)"));
  CHECK(contains(r.out, "free_ghat <= 1 (total_length)"));
  r = run({"--json", "chain-bound", "3_1"});
  CHECK(nlohmann::json::parse(r.out)["longest_chain_length"] == 1);
  CHECK(run({"chain-bound", "nosuch"}).code == 1);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"check", "3_1"}).code == 1);
  CHECK(run({"--threads", "0", "poset"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}
