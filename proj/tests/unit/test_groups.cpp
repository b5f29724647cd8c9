#include "doctest.h"
#include "helpers.hpp"

using namespace pascal;

TEST_CASE("free abelian multiply and inverse") {
  const auto z2 = GroupSpec::free_abelian(2);
  CHECK(multiply(z2, GroupValue::vector({1, 0}), GroupValue::vector({0, 1})) == GroupValue::vector({1, 1}));
  const auto z = GroupSpec::free_abelian(1);
  CHECK(inverse(z, GroupValue::vector({7})) == GroupValue::vector({-7}));
  CHECK(is_identity(multiply(z, GroupValue::vector({7}), GroupValue::vector({-7}))));
}

TEST_CASE("free group words reduce") {
  const auto f2 = GroupSpec::free(2, "xy");
  const auto xY = parse_value(f2, "\"xY\"");
  const auto yx = parse_value(f2, "\"yx\"");
  CHECK(to_string(f2, multiply(f2, xY, yx)) == "xx");
  const auto f1 = GroupSpec::free(1, "x");
  CHECK(to_string(f1, inverse(f1, parse_value(f1, "\"xx\""))) == "XX");
  CHECK(to_string(f2, parse_value(f2, "\"xyYX\"")) == "1");
}

TEST_CASE("finite table") {
  const auto z3 = GroupSpec::cyclic(3);
  CHECK(z3.inverse_index(1) == 2);
  CHECK(z3.is_commutative());
  CHECK_THROWS_AS(GroupSpec::finite({{0, 1}, {1, 1}}), StructuralError);
}

TEST_CASE("free product syllables") {
  const auto dinf = GroupSpec::free_product(GroupSpec::cyclic(2), GroupSpec::cyclic(2));
  const auto r = GroupValue::syllables({Side::Left}, {GroupValue::element(1)});
  CHECK(is_identity(multiply(dinf, r, r)));
  const auto s = GroupValue::syllables({Side::Right}, {GroupValue::element(1)});
  const auto rsr = multiply(dinf, multiply(dinf, r, s), r);
  CHECK(rsr.syllable_count() == 3);
  CHECK(to_string(dinf, rsr) == "L[1]*R[1]*L[1]");
}

TEST_CASE("keys round trip and separate values") {
  const auto doc = test::preset("z2z3");
  const Ball ball = Ball::build(doc.gens, 4);
  std::set<std::string> keys;
  for (Ball::Index i = 0; i < ball.size(); ++i) {
    std::string key = encode_key(ball.value(i));
    std::string_view view = key;
    CHECK(decode_key(doc.spec, view) == ball.value(i));
    CHECK(view.empty());
    keys.insert(key);
  }
  CHECK(keys.size() == ball.size());
}

TEST_CASE("evaluate words") {
  const auto z2 = test::preset("z2");
  CHECK(evaluate(z2.gens, parse_word(z2.gens, "e1 e2 e1")) == GroupValue::vector({2, 1}));
  const auto zts = test::preset("z-t-s10");
  CHECK(evaluate(zts.gens, parse_word(zts.gens, "s t^-1")) == GroupValue::vector({9}));
  const auto f2e = test::preset("f2-extended");
  CHECK(to_string(f2e.spec, evaluate(f2e.gens, parse_word(f2e.gens, "a b"))) == "xxxyyy");
  CHECK(evaluate(z2.gens, {}) == identity(z2.spec));
  CHECK_THROWS_AS(parse_word(z2.gens, "e3"), ParseError);
}

TEST_CASE("closing under inversion") {
  const auto z = GroupSpec::free_abelian(1);
  const auto gens = close_under_inversion(z, {{"t", GroupValue::vector({1})}});
  REQUIRE(gens.size() == 2);
  CHECK(gens.name(1) == "t^-1");
  CHECK(gens.value(1) == GroupValue::vector({-1}));
  CHECK(gens.inverse(0) == 1);

  const auto z2 = GroupSpec::cyclic(2);
  const auto invol = close_under_inversion(z2, {{"r", GroupValue::element(1)}});
  CHECK(invol.size() == 1);
  CHECK(invol.inverse(0) == 0);

  const auto f1 = GroupSpec::free(1, "x");
  const auto fx = close_under_inversion(f1, {{"x", parse_value(f1, "\"x\"")}, {"a", parse_value(f1, "\"xxx\"")}});
  CHECK(fx.size() == 4);
  CHECK(fx.name(2) == "x^-1");
  CHECK(fx.name(3) == "a^-1");
}

TEST_CASE("generating set invariants") {
  const auto z = GroupSpec::free_abelian(1);
  CHECK_THROWS_AS(GenSet(z, {{"t", GroupValue::vector({1})}}), StructuralError);
  CHECK_THROWS_AS(GenSet(z, {{"z", GroupValue::vector({0})}}), StructuralError);
  CHECK_THROWS_AS(close_under_inversion(z, {{"t", GroupValue::vector({1})}, {"u", GroupValue::vector({1})}}),
                  StructuralError);
}

TEST_CASE("generation check") {
  CHECK(check_generation(test::preset("z2").gens).status == GenerationCheck::Status::Verified);
  CHECK(check_generation(test::preset("z-z2").gens).status == GenerationCheck::Status::Verified);
  CHECK(check_generation(test::preset("f2-extended").gens).status == GenerationCheck::Status::Verified);
  CHECK(check_generation(test::preset("dinf").gens).status == GenerationCheck::Status::Verified);

  const auto even = test::parse(R"({"group": {"type": "free_abelian", "rank": 1},
                                    "generators": [{"name": "u", "value": [2]}]})");
  const auto check = check_generation(even.gens);
  CHECK(check.status == GenerationCheck::Status::NotGenerating);
  CHECK(check.note.find("index 2") != std::string::npos);

  // x y alone generates a cyclic subgroup of F2; the sufficient test cannot tell.
  const auto diag = test::parse(R"({"group": {"type": "free", "rank": 2, "letters": "xy"},
                                    "generators": [{"name": "w", "value": "xy"}]})");
  CHECK(check_generation(diag.gens).status == GenerationCheck::Status::Unchecked);
}
