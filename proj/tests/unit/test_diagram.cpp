#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "knotdom/diagram.hpp"
#include "oracles.hpp"

using namespace knotdom;

namespace {
const char* kTrefoil = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
const char* kFigureEight = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";
}  // namespace

TEST_CASE("parse and print PD codes") {
  const PDCode pd = parse_pd(kTrefoil);
  CHECK(pd.crossing_count() == 3);
  CHECK(pd.to_string() == kTrefoil);
  CHECK(parse_pd(" X( 1, 4,2 ,5)\nX(3,6,4,1)  X(5,2,6,3) ") == pd);
  CHECK(parse_pd("").crossing_count() == 0);
  CHECK(pd.writhe() == -3);
  CHECK(parse_pd(kFigureEight).writhe() == 0);
  for (int i = 0; i < 3; ++i) CHECK(pd.sign(i) == -1);
  CHECK(pd.over_in(0) == 4);
  CHECK(pd.over_out(0) == 5);
}

TEST_CASE("invalid PD codes are rejected") {
  for (const char* bad : {
           "X(1,4,2)",                          // arity
           "X(1,4,2,5) X(3,6,4,1) X(5,2,6,7)",  // label out of range
           "X(1,4,2,5) X(3,6,4,1) X(5,2,6,2)",  // label three times
           "X(1,4,3,5) X(2,6,4,1) X(5,2,6,3)",  // c != a + 1
           "Y(1,1,2,2)",
           "X(1,1,2,2) junk",
       })
    CHECK_THROWS_AS(parse_pd(bad), DiagramError);
}

TEST_CASE("one-crossing kinks") {
  CHECK(parse_pd("X(1,1,2,2)").sign(0) == 1);
  CHECK(parse_pd("X(1,2,2,1)").crossing_count() == 1);
  CHECK(parse_pd("X(1,2,2,1)").sign(0) == -1);
}

TEST_CASE("mirror flips every sign and is an involution") {
  const PDCode pd = parse_pd(kTrefoil);
  const PDCode m = mirror(pd);
  CHECK(m.to_string() == "X(4,2,5,1) X(6,4,1,3) X(2,6,3,5)");
  CHECK(m.writhe() == 3);
  CHECK(mirror(m) == pd);
}

TEST_CASE("braid closures") {
  CHECK(braid_to_pd(parse_braid("B2: 1")).to_string() == "X(1,1,2,2)");
  CHECK(braid_to_pd(parse_braid("B2: 1 1 1")).to_string() == "X(1,5,2,4) X(5,3,6,2) X(3,1,4,6)");
  CHECK(braid_to_pd(parse_braid("B3: 1 -2 1 -2")).to_string() == "X(1,5,2,4) X(7,2,8,3) X(5,1,6,8) X(3,6,4,7)");
  CHECK(parse_braid("B3:1 -2").to_string() == "B3: 1 -2");
  CHECK(closure_components(parse_braid("B2: 1 -1")) == 2);
  CHECK(closure_components(parse_braid("B3: 1 2")) == 1);
  CHECK_THROWS_AS(braid_to_pd(parse_braid("B2: 1 -1")), DiagramError);
  CHECK_THROWS_AS(braid_to_pd(parse_braid("B3: 1")), DiagramError);
  for (const char* bad : {"B2: 2", "B2: 0", "B0:", "2: 1", "B2 1", "B2: x"})
    CHECK_THROWS_AS(parse_braid(bad), DiagramError);
  CHECK(braid_to_pd(parse_braid("B1:")).crossing_count() == 0);
}

TEST_CASE("braid closure signs match the letters") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 1000; ++i) {
    const BraidWord w = oracle::random_knot_braid(rng, 4, 10);
    const PDCode pd = braid_to_pd(w);
    REQUIRE(pd.crossing_count() == static_cast<int>(w.letters.size()));
    int writhe = 0;
    for (int l : w.letters) writhe += l > 0 ? 1 : -1;
    REQUIRE(pd.writhe() == writhe);
    // Seifert's algorithm on a closed braid recovers one circle per strand.
    REQUIRE(seifert_circles(pd).circle_count == w.strand_count);
    REQUIRE(PDCode(pd.crossings()) == pd);
  }
}

TEST_CASE("Wirtinger presentations") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 1000; ++i) {
    const PDCode pd = braid_to_pd(oracle::random_knot_braid(rng, 4, 9));
    const auto pres = wirtinger(pd);
    // One over-arc ends at each crossing (at its under-strand).
    REQUIRE(pres.generator_count == pd.crossing_count());
    REQUIRE(pres.relations.size() == static_cast<std::size_t>(pd.crossing_count()));
    REQUIRE(abelianized_rank(pres) == pres.generator_count - 1);
  }
  const auto unknot = wirtinger(parse_pd(""));
  CHECK(unknot.generator_count == 1);
  CHECK(unknot.relations.empty());
  CHECK(abelianized_rank(unknot) == 0);
}

TEST_CASE("Seifert circles") {
  CHECK(seifert_circles(parse_pd(kTrefoil)).circle_count == 2);
  CHECK(seifert_circles(parse_pd(kTrefoil)).genus_upper == 1);
  CHECK(seifert_circles(parse_pd(kFigureEight)).circle_count == 3);
  CHECK(seifert_circles(parse_pd(kFigureEight)).genus_upper == 1);
  CHECK(seifert_circles(parse_pd("")).circle_count == 1);
  CHECK(seifert_circles(parse_pd("")).genus_upper == 0);
}
