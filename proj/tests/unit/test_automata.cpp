#include "doctest.h"
#include "helpers.hpp"

using namespace pascal;

namespace {

GeodesicAcceptor acceptor_for(const std::string& preset) {
  const auto doc = test::preset(preset);
  AcceptorSchedule s;
  s.train_radius = doc.hints.train_radius.value_or(4);
  return build_acceptor(doc.gens, s);
}

TransferBundle bundle_for(const std::string& preset) {
  const auto doc = test::preset(preset);
  AcceptorSchedule s;
  s.train_radius = doc.hints.train_radius.value_or(4);
  return build_transfer(doc.gens, s);
}

}  // namespace

TEST_CASE("acceptor sizes") {
  CHECK(acceptor_for("z-single").size() == 3);
  CHECK(acceptor_for("f2-basis").size() == 5);
  const auto dinf = acceptor_for("dinf");
  REQUIRE(dinf.size() == 3);
  for (State s = 1; s < 3; ++s) {
    std::size_t out = 0;
    for (GenIndex a = 0; a < dinf.letters(); ++a) out += dinf.next(s, a).has_value();
    CHECK(out == 1);
  }
}

TEST_CASE("acceptor validation") {
  const auto zts = test::preset("z-t-s10");
  const Ball ball = Ball::build(zts.gens, 12);
  const auto acc = build_acceptor(ball, 6, 4);
  CHECK(validate_acceptor(acc, ball).ok);

  const auto f2 = test::preset("f2-basis");
  const Ball fb = Ball::build(f2.gens, 6);
  const auto tree = build_acceptor(fb, 3, 1);
  CHECK(tree.size() == 5);
  CHECK(validate_acceptor(tree, fb).ok);
}

TEST_CASE("undersized cone radius") {
  const auto zts = test::preset("z-t-s10");
  const Ball ball = Ball::build(zts.gens, 12);
  for (std::size_t r = 1; r <= 3; ++r) {
    CAPTURE(r);
    try {
      build_acceptor(ball, 6, r);
      FAIL("expected InconsistentConeRadius");
    } catch (const InconsistentConeRadius& e) {
      CHECK(std::string(e.what()).find("disagree after letter") != std::string::npos);
    }
  }
}

TEST_CASE("validation reports a counterexample word") {
  const auto z = test::preset("z-single");
  const Ball ball = Ball::build(z.gens, 6);
  auto acc = build_acceptor(ball, 3, 2);
  REQUIRE(validate_acceptor(acc, ball).ok);
  // Let the positive ray turn around: t t^-1 becomes accepted.
  const State pos = *acc.next(0, 0);
  acc.set_next(pos, 1, pos);
  const auto check = validate_acceptor(acc, ball);
  REQUIRE_FALSE(check.ok);
  CHECK(check.accepted);
  CHECK(format_word(z.gens, check.counterexample) == "t t^-1");
}

TEST_CASE("training radius too small") {
  const auto zts = test::preset("z-t-s10");
  const Ball ball = Ball::build(zts.gens, 10);
  CHECK_THROWS_AS(build_acceptor(ball, 4, 4), InsufficientRadius);
  AcceptorSchedule fixed;
  fixed.train_radius = 4;
  CHECK_THROWS_AS(build_acceptor(zts.gens, fixed), InsufficientRadius);
  AcceptorSchedule grow = fixed;
  grow.max_train_radius = 7;
  CHECK(build_acceptor(zts.gens, grow).size() == 27);
}

TEST_CASE("minimize keeps the language") {
  const auto hex = test::preset("z2-hexagon");
  const Ball ball = Ball::build(hex.gens, 9);
  const auto raw = build_acceptor(ball, 4, 4);
  const auto small = minimize(raw);
  CHECK(small.size() <= raw.size());
  CHECK(validate_acceptor(small, ball).ok);
  CHECK(minimize(small) == small);
}

TEST_CASE("pair machine on Z") {
  const auto doc = test::preset("z-single");
  const auto acc = acceptor_for("z-single");
  const auto pm = build_pair_machine(doc.gens, acc, 2);
  for (const auto& node : pm.states)
    for (const auto& e : node.edges) CHECK(e.a == e.b);
  const Word t3(3, 0);
  CHECK(pm.accepts(t3, t3));
  CHECK_FALSE(pm.accepts(t3, Word(3, 1)));
}

TEST_CASE("pair machine on F2 extended") {
  const auto doc = test::preset("f2-extended");
  const auto acc = acceptor_for("f2-extended");
  const auto pm = build_pair_machine(doc.gens, acc, 2);
  CHECK(pm.accepts(parse_word(doc.gens, "a b"), parse_word(doc.gens, "c y")));
  CHECK(pm.accepts(parse_word(doc.gens, "c y"), parse_word(doc.gens, "a b")));
  CHECK_FALSE(pm.accepts(parse_word(doc.gens, "a b"), parse_word(doc.gens, "a y")));
  CHECK(pm.accepting(0));
}

TEST_CASE("difference overflow in Z^2") {
  const auto doc = test::preset("z2");
  const auto acc = acceptor_for("z2");
  for (std::size_t d : {0, 1, 5, 20}) {
    CAPTURE(d);
    CHECK_THROWS_AS(build_pair_machine(doc.gens, acc, d), DifferenceOverflow);
  }
  AcceptorSchedule s;
  DifferenceSchedule ds;
  ds.cap = 16;
  CHECK_THROWS_AS(build_transfer(doc.gens, s, ds), DifferenceOverflow);
}

TEST_CASE("count matrices") {
  const auto b = bundle_for("z-single");
  const auto& cm = b.matrices;
  CHECK(cm.u[0] == 1);
  for (std::size_t i = 1; i < cm.size; ++i) CHECK(cm.u[i] == 0);
  for (const auto& x : cm.v) CHECK((x == 0 || x == 1));
  CHECK(pascal_via_matrices(b, Word{0}) == 1);
  CHECK(pascal_via_matrices(b, {}) == 1);

  const auto dinf = test::preset("dinf");
  const auto db = bundle_for("dinf");
  CHECK(pascal_via_matrices(db, parse_word(dinf.gens, "r s r")) == 1);
  CHECK_THROWS_AS(pascal_via_matrices(db, parse_word(dinf.gens, "r r")), NonGeodesicInput);
}

TEST_CASE("row sums bounded by pair out-degree") {
  const auto doc = test::preset("f2-extended");
  const auto acc = acceptor_for("f2-extended");
  const auto pm = build_pair_machine(doc.gens, acc, 2);
  const auto cm = extract_matrices(pm);
  for (State s = 0; s < pm.size(); ++s) {
    for (GenIndex a = 0; a < doc.gens.size(); ++a) {
      BigCount sum = 0;
      for (const auto& [t, x] : cm.m[a].row(s)) sum += x;
      std::size_t degree = 0;
      for (const auto& e : pm.states[s].edges) degree += e.a == a;
      CHECK(sum == degree);
    }
  }
}

TEST_CASE("transfer evaluation") {
  const auto f2e = test::preset("f2-extended");
  const auto fb = bundle_for("f2-extended");
  CHECK(pascal_via_matrices(fb, parse_word(f2e.gens, "a b a b a b")) == 8);

  const auto zts = test::preset("z-t-s10");
  const auto zb = bundle_for("z-t-s10");
  CHECK(pascal_via_matrices(zb, parse_word(zts.gens, "s s s s t t t t t")) == 126);
  CHECK(zb.difference_bound == 16);
}

TEST_CASE("matrix validation") {
  const auto zts = test::preset("z-t-s10");
  const auto zb = bundle_for("z-t-s10");
  const auto ok = validate_matrices(zb, Ball::build(zts.gens, 10));
  CHECK(ok.ok);
  CHECK(ok.compared == 161);
  CHECK(ok.second_geodesics > 0);

  auto broken = zb;
  // Double the first nonzero entry of M_t that some short word uses.
  const auto& row = broken.matrices.m[0].row(0);
  REQUIRE_FALSE(row.empty());
  broken.matrices.m[0].set(0, row.front().first, row.front().second + 1);
  const auto bad = validate_matrices(broken, Ball::build(zts.gens, 4));
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.mismatch);
  CHECK(bad.expected != bad.got);
}

TEST_CASE("language growth") {
  const auto dinf = language_growth(acceptor_for("dinf"), 10);
  CHECK(dinf.label() == "linear-bounded");
  CHECK(dinf.counts[0] == 1);
  for (std::size_t n = 1; n <= 10; ++n) CHECK(dinf.counts[n] == 2);

  const auto f2 = language_growth(acceptor_for("f2-basis"), 6);
  CHECK(f2.label() == "exponential");
  CHECK(f2.counts[1] == 4);
  CHECK(f2.counts[3] == 36);

  CHECK(language_growth(acceptor_for("z-single"), 5).label() == "linear-bounded");
  const auto zts = language_growth(acceptor_for("z-t-s10"), 30);
  CHECK(zts.kind == LanguageGrowth::Kind::Polynomial);
  CHECK(zts.degree == 5);
  CHECK(zts.label() == "polynomial degree 5");
}

TEST_CASE("serialization round trip") {
  const auto zb = bundle_for("z-t-s10");
  const std::string text = serialize(zb);
  const auto back = deserialize(text);
  CHECK(back == zb);
  CHECK(serialize(back) == text);

  const auto acc = acceptor_for("f2-extended");
  CHECK(deserialize_acceptor(serialize_acceptor(acc)) == acc);
}

TEST_CASE("malformed artifacts") {
  CHECK_THROWS_AS(deserialize("{"), ParseError);
  CHECK_THROWS_AS(deserialize(R"({"format": "pascal-transfer/9"})"), ParseError);
  auto text = serialize(bundle_for("z-single"));
  const auto at = text.find("\"start\"");
  REQUIRE(at != std::string::npos);
  text.replace(at, 7, "\"begin\"");
  CHECK_THROWS_AS(deserialize(text), ParseError);
}
