#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "knotdom/knotbase.hpp"

using namespace knotdom;
using nlohmann::json;

namespace {

LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }

json minimal(const std::string& name, const std::string& pd) { return {{"name", name}, {"diagram", pd}}; }

const char* kTrefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

void expect_corpus_error(const json& doc, const std::string& fragment) {
  try {
    parse_corpus(doc);
    FAIL("expected CorpusError containing: " << fragment);
  } catch (const CorpusError& e) {
    INFO(std::string(e.what()));
    CHECK(std::string(e.what()).find(fragment) != std::string::npos);
  }
}

}  // namespace

TEST_CASE("bundled corpus loads and is enriched") {
  const Corpus c = load_corpus(KNOTDOM_CORPUS_PATH);
  CHECK(c.size() == 15);
  for (const auto& [name, r] : c.records()) {
    CAPTURE(name);
    CHECK(r.enriched);
    REQUIRE(r.delta);
    CHECK(abs(eval_int(*r.delta, 1)) == 1);
    CHECK(r.determinant);
  }
  CHECK(*c.at("4_1").delta == P("1 - 3t + t^2"));
  CHECK(*c.at("6_2").determinant == 11);
  CHECK(*c.at("5_1").delta == P("1 - t + t^2 - t^3 + t^4"));
  CHECK(*c.at("granny").jones == P("t^-8 - 2t^-7 + t^-6 - 2t^-5 + 2t^-4 + t^-2"));
  CHECK(*c.at("3_1").ghat == 1);
  CHECK(*c.at("granny").ghat == 2);
  CHECK(*c.at("ks_cable23_of_4_1").ghat == 3);
  CHECK_FALSE(c.at("double_of_3_1").ghat);
  CHECK(*c.at("unknot").genus_exact == 0);
  CHECK(c.at("trefoil_alt_diagram").canonical_name() == "3_1");
  CHECK(*c.at("trefoil_alt_diagram").delta == *c.at("3_1").delta);
  // Implications: 2-bridge gives small and free; hyperbolic gives simple.
  CHECK(c.at("5_2").flags[Flag::small]);
  CHECK(c.at("5_2").flags[Flag::free]);
  CHECK(c.at("4_1").flags[Flag::simple]);
  CHECK(c.at("4_1").flags[Flag::no_winding_zero_companion]);
  CHECK(is_true(c.at("KT_mutant").sum_of_simple));
  CHECK(c.at("unknot").flag(Flag::hyperbolic) == Tri::False);
  CHECK(c.at("band_sum_3_1").flag(Flag::free) == Tri::Unknown);
  CHECK(load_corpus(KNOTDOM_CORPUS_PATH, 4).names() == c.names());
}

TEST_CASE("genus intervals") {
  const Corpus c = load_corpus(KNOTDOM_CORPUS_PATH);
  auto g = genus_interval(c.at("5_2"));
  CHECK(g.lower == 1);
  CHECK(*g.upper == 1);
  g = genus_interval(c.at("band_sum_3_1"));
  CHECK(g.lower == 2);
  CHECK_FALSE(g.upper);
  g = genus_interval(c.at("KT_mutant"));
  CHECK(g.lower == 2);
  CHECK(*g.upper == 2);
}

TEST_CASE("enrichment is idempotent and serialization round-trips") {
  const Corpus c = load_corpus(KNOTDOM_CORPUS_PATH);
  for (const auto& [name, r] : c.records()) {
    CAPTURE(name);
    const json once = record_to_json(r);
    const KnotRecord again = enrich_record(record_from_json(once));
    CHECK(record_to_json(again) == once);
    CHECK(record_to_json(enrich_record(r)) == once);
  }
}

TEST_CASE("flag closure reaches a fixed point quickly") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> pick(0, 5);
  int consistent = 0;
  for (int i = 0; i < 2000; ++i) {
    KnotRecord r;
    r.name = "random";
    for (std::size_t f = 0; f < kFlagCount; ++f) {
      const int v = pick(rng);
      r.flags.set(static_cast<Flag>(f), v == 0 ? Tri::True : v == 1 ? Tri::False : Tri::Unknown);
    }
    try {
      const int passes = apply_flag_closure(r);
      ++consistent;
      REQUIRE(passes <= 3);
      KnotRecord copy = r;
      REQUIRE(apply_flag_closure(copy) == 1);
      REQUIRE(copy.flags == r.flags);
      if (r.flags[Flag::two_bridge]) REQUIRE(r.flags[Flag::free]);
      if (r.flags[Flag::hyperbolic]) REQUIRE(r.flags[Flag::no_winding_zero_companion]);
    } catch (const CorpusError&) {
    }
  }
  CHECK(consistent > 100);
}

TEST_CASE("invalid records") {
  json doc = json::array({minimal("a", kTrefoil), minimal("a", kTrefoil)});
  expect_corpus_error(doc, "duplicate");

  json wrong = minimal("t", kTrefoil);
  wrong["delta"] = "1 - 3t + t^2";
  expect_corpus_error(json::array({wrong}), "declared delta");

  json det = minimal("t", kTrefoil);
  det["determinant"] = 5;
  expect_corpus_error(json::array({det}), "determinant");

  json jones = minimal("t", kTrefoil);
  jones["jones"] = "t + t^3 - t^4";
  expect_corpus_error(json::array({jones}), "jones");

  expect_corpus_error(json::array({{{"name", "m"}}}), "must declare delta");
  expect_corpus_error(json::array({{{"name", "m"}, {"delta", "1 - 3t"}}}), "delta(1)");
  expect_corpus_error(json::array({{{"name", "m"}, {"delta", "1 - 2t + 3t^2"}}}), "delta(1)");
  expect_corpus_error(json::array({{{"name", "m"}, {"delta", "1"}, {"colour", "red"}}}), "colour");
  expect_corpus_error(json::array({{{"name", "m"}, {"delta", "1"}, {"flags", {{"shiny", true}}}}}), "shiny");
  expect_corpus_error(json::array({{{"name", "m"}, {"delta", "1"}, {"flags", {{"two_bridge", true}, {"free", false}}}}}),
                      "contradiction");
  expect_corpus_error(json::array({{{"name", "m"}, {"delta", "2 - 3t + 2t^2"}, {"flags", {{"fibred", true}}}}}),
                      "non-monic");
  expect_corpus_error(json::array({{{"name", "m"}, {"delta", "1"}, {"same_knot_as", "nowhere"}}}), "nowhere");
  expect_corpus_error(json::array({{{"name", "m"}, {"delta", "1"}, {"mutant_class", "lonely"}}}), "lonely");
  expect_corpus_error(json::array({minimal("3_1", kTrefoil),
                                   {{"name", "s"}, {"delta", "1 - t + t^2"}, {"connected_sum_of", {"3_1", "3_1"}}}}),
                      "product of its summands");
  expect_corpus_error(
      json::array({minimal("3_1", kTrefoil),
                   {{"name", "s"},
                    {"delta", "1 - t + t^2"},
                    {"satellite_of", {{"pattern", "3_1"}, {"companion", "3_1"}, {"winding", 2}}}}}),
      "satellite");
  expect_corpus_error(json::array({{{"name", "b"}, {"braid", "B2: 1 -1"}}}), "components");
  expect_corpus_error(json::array({{{"name", "v"}, {"delta", "1"}, {"volume", "-1"}}}), "volume");
  CHECK_THROWS_AS(parse_corpus(json::object()), CorpusError);
}

TEST_CASE("missing corpus file is named in the error") {
  try {
    load_corpus("/nonexistent/knots.json");
    FAIL("expected an error");
  } catch (const CorpusError& e) {
    CHECK(std::string(e.what()).find("/nonexistent/knots.json") != std::string::npos);
  }
}

TEST_CASE("volumes") {
  CHECK(Volume::parse("2.02988321").str() == "2.02988321");
  CHECK(Volume::parse("0").str() == "0.00000000");
  CHECK(Volume::parse("2.029883212").str() == "2.02988321");
  CHECK(Volume::parse("2.029883215").str() == "2.02988322");
  CHECK(Volume::parse("11.21911772") == Volume::parse("11.219117720"));
}
