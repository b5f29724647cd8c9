#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace pascal;

namespace {

const char* kZxZ2Flip = R"({"group": {"type": "direct_product",
                                      "left": {"type": "free_abelian", "rank": 1},
                                      "right": {"type": "finite", "cyclic": 2}},
                            "generators": [{"name": "a", "value": [[1], 0]},
                                           {"name": "f", "value": [[0], 1]}]})";

}  // namespace

TEST_CASE("pascal triangle entry in Z^2") {
  const auto doc = test::preset("z2");
  const Ball ball = Ball::build(doc.gens, 3);
  const auto g = test::find(ball, GroupValue::vector({2, 1}));
  CHECK(ball.length(g) == 3);
  CHECK(ball.count(g) == 3);
}

TEST_CASE("radius zero ball") {
  const Ball ball = Ball::build(test::preset("f2-extended").gens, 0);
  REQUIRE(ball.size() == 1);
  CHECK(ball.length(0) == 0);
  CHECK(ball.count(0) == 1);
  CHECK(is_identity(ball.value(0)));
}

TEST_CASE("t^15 over t and s = t^10") {
  const Ball ball = Ball::build(test::preset("z-t-s10").gens, 6);
  const auto g = test::find(ball, GroupValue::vector({15}));
  CHECK(ball.length(g) == 6);
  CHECK(ball.count(g) == 6);
}

TEST_CASE("F2 basis ball is a tree") {
  const auto doc = test::preset("f2-basis");
  CHECK(Ball::build(doc.gens, 4).size() == 161);
  const Ball ball = Ball::build(doc.gens, 5);
  CHECK(ball.size() == 485);
  CHECK(pascal_identically_one(ball).holds);
}

TEST_CASE("ball agrees with the word oracle") {
  for (const auto& [name, radius] : std::vector<std::pair<std::string, std::size_t>>{
           {"z2", 6}, {"z-t-s10", 5}, {"z2-hexagon", 4}, {"f2-extended", 3}, {"z2z3", 6}, {"z-z2", 5}}) {
    CAPTURE(name);
    const auto doc = test::preset(name);
    const Ball ball = Ball::build(doc.gens, radius);
    const auto census = oracle::word_census(doc.gens, radius);
    REQUIRE(census.size() == ball.size());
    for (const auto& [key, e] : census) {
      auto i = ball.find_key(key);
      REQUIRE(i);
      CHECK(ball.length(*i) == e.length);
      CHECK(ball.count(*i) == e.count);
    }
  }
}

TEST_CASE("ball layout") {
  const Ball ball = Ball::build(test::preset("z2").gens, 4);
  CHECK(ball.layer_begin(0) == 0);
  CHECK(ball.layer_end(0) == 1);
  for (std::size_t r = 0; r <= 4; ++r) {
    // Z^2 spheres of radius r > 0 hold 4r points.
    CHECK(ball.layer_end(r) - ball.layer_begin(r) == (r == 0 ? 1 : 4 * r));
    for (auto i = ball.layer_begin(r); i < ball.layer_end(r); ++i) CHECK(ball.length(i) == r);
  }
  CHECK_FALSE(ball.find(GroupValue::vector({5, 0})));
  CHECK_FALSE(ball.length_of(GroupValue::vector({3, 2})));
  CHECK(ball.length_of(GroupValue::vector({-2, 2})) == 4);
}

TEST_CASE("ball size cap") {
  BallOptions tight;
  tight.max_elements = 20;
  CHECK_THROWS_AS(Ball::build(test::preset("f2-basis").gens, 5, tight), ResourceError);
}

TEST_CASE("geodesic enumeration") {
  const auto z2 = test::preset("z2");
  const Ball ball = Ball::build(z2.gens, 3);
  const auto list = enumerate_geodesics(ball, GroupValue::vector({1, 1}), 10);
  REQUIRE(list.words.size() == 2);
  CHECK(format_word(z2.gens, list.words[0]) == "e1 e2");
  CHECK(format_word(z2.gens, list.words[1]) == "e2 e1");
  CHECK_FALSE(list.truncated);

  const auto capped = enumerate_geodesics(ball, GroupValue::vector({2, 1}), 2);
  CHECK(capped.words.size() == 2);
  CHECK(capped.truncated);

  const auto empty = enumerate_geodesics(ball, identity(z2.spec), 5);
  REQUIRE(empty.words.size() == 1);
  CHECK(empty.words[0].empty());

  const auto f2e = test::preset("f2-extended");
  const Ball fb = Ball::build(f2e.gens, 2);
  const auto x3y3 = enumerate_geodesics(fb, test::value(f2e, "\"xxxyyy\""), 10);
  std::set<std::string> words;
  for (const auto& w : x3y3.words) words.insert(format_word(f2e.gens, w));
  CHECK(words == std::set<std::string>{"a b", "c y"});
}

TEST_CASE("some geodesic follows predecessors") {
  const auto doc = test::preset("z2-hexagon");
  const Ball ball = Ball::build(doc.gens, 5);
  for (Ball::Index i = 0; i < ball.size(); ++i) {
    for (auto choice : {PredecessorChoice::First, PredecessorChoice::Last}) {
      const Word w = some_geodesic(ball, i, choice);
      CHECK(w.size() == ball.length(i));
      CHECK(evaluate(doc.gens, w) == ball.value(i));
    }
  }
}

TEST_CASE("is geodesic") {
  const auto doc = test::preset("z-t-s10");
  const Ball ball = Ball::build(doc.gens, 10);
  CHECK(is_geodesic(ball, parse_word(doc.gens, "t t")));
  CHECK_FALSE(is_geodesic(ball, parse_word(doc.gens, "t t^-1")));
  CHECK_FALSE(is_geodesic(ball, Word(10, *doc.gens.find("t"))));
  CHECK(is_geodesic(ball, Word(5, *doc.gens.find("t"))));
  CHECK_THROWS_AS(is_geodesic(ball, Word(11, *doc.gens.find("s"))), InsufficientRadius);
}

TEST_CASE("totally geodesic subgroups") {
  const auto doc = test::preset("z-t-s10");
  const Ball ball = Ball::build(doc.gens, 8);
  CHECK(is_totally_geodesic(ball, Sublattice{{{10}}}).holds);
  const auto five = is_totally_geodesic(ball, Sublattice{{{5}}});
  CHECK_FALSE(five.holds);
  CHECK(evaluate(doc.gens, five.word) == GroupValue::vector({5}));
  CHECK(is_totally_geodesic(ball, WholeGroup{}).holds);
}

TEST_CASE("restricted pascal") {
  const auto doc = test::preset("z-t-s10");
  const Ball ball = Ball::build(doc.gens, 8);
  const auto tens = restricted_pascal_agrees(ball, Sublattice{{{10}}});
  CHECK(tens.agrees);
  CHECK(tens.compared == 17);
  CHECK(restricted_pascal_agrees(ball, WholeGroup{}).agrees);

  const auto flip = test::parse(kZxZ2Flip);
  const Ball fb = Ball::build(flip.gens, 6);
  const auto left = restricted_pascal_agrees(fb, FactorSubgroup{Side::Left});
  CHECK(left.agrees);
  CHECK(left.compared == 13);
}

TEST_CASE("finite kernel membership") {
  const auto doc = test::preset("z2");
  const Ball ball = Ball::build(doc.gens, 4);
  // Parity of the coordinate sum: every generator maps to the flip.
  const FiniteKernel even{GroupSpec::cyclic(2), {1, 1, 1, 1}};
  const auto in = membership(ball, even);
  for (Ball::Index i = 0; i < ball.size(); ++i) CHECK(in[i] == (ball.length(i) % 2 == 0));
  CHECK_FALSE(is_totally_geodesic(ball, even).holds);
  CHECK_THROWS_AS(membership(ball, FiniteKernel{GroupSpec::cyclic(2), {1, 1}}), StructuralError);
}

TEST_CASE("identically one") {
  CHECK(pascal_identically_one(Ball::build(test::preset("dinf").gens, 15)).holds);
  CHECK(pascal_identically_one(Ball::build(test::preset("z-single").gens, 15)).holds);
  const Ball ball = Ball::build(test::preset("z-t-s10").gens, 6);
  const auto r = pascal_identically_one(ball);
  REQUIRE_FALSE(r.holds);
  // The first failure in ball order is t s = 11 with two geodesics; 15 has six.
  CHECK(ball.value(*r.counterexample) == GroupValue::vector({11}));
  CHECK(ball.count(*r.counterexample) == 2);
  CHECK(ball.count(test::find(ball, GroupValue::vector({15}))) == 6);
}

TEST_CASE("bound witness") {
  const Ball zts = Ball::build(test::preset("z-t-s10").gens, 9);
  const auto w = pascal_bound_witness(zts, 100);
  REQUIRE(w);
  CHECK(zts.value(*w) == GroupValue::vector({45}));
  CHECK(zts.count(*w) == 126);

  CHECK_FALSE(pascal_bound_witness(Ball::build(test::preset("dinf").gens, 12), 1));

  const auto f2e = test::preset("f2-extended");
  const Ball fb = Ball::build(f2e.gens, 4);
  const auto v = pascal_bound_witness(fb, 3);
  REQUIRE(v);
  // y^2 = a^-1 c already has four geodesics and comes first.
  CHECK(fb.value(*v) == test::value(f2e, "\"yy\""));
  CHECK(fb.count(*v) == 4);
  CHECK(fb.count(test::find(fb, test::value(f2e, "\"xxxyyyxxxyyy\""))) == 4);
}
