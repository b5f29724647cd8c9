#include "doctest.h"
#include "helpers.hpp"

using namespace pascal;

namespace {

std::string parse_error(const std::string& json) {
  try {
    parse_spec(json, "doc");
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("presets load") {
  const auto names = preset_names(PASCAL_PRESET_DIR);
  for (const char* required : {"z2", "z-t-s10", "f2-basis", "f2-extended", "dinf", "z2z3"})
    CHECK(std::find(names.begin(), names.end(), required) != names.end());
  for (const auto& n : names) {
    CAPTURE(n);
    const auto doc = test::preset(n);
    CHECK(doc.name == n);
    CHECK(doc.gens.size() > 0);
  }
  CHECK(test::preset("z-t-s10").hints.train_radius == 6);
  CHECK_THROWS_AS(load_preset("no-such-group", PASCAL_PRESET_DIR), ParseError);
}

TEST_CASE("inversion closure flag") {
  const auto open = test::parse(R"({"group": {"type": "free_abelian", "rank": 1},
                                    "generators": [{"name": "t", "value": [1]}]})");
  CHECK(open.gens.size() == 2);
  const auto closed = test::parse(R"({"group": {"type": "free_abelian", "rank": 1}, "close_under_inversion": false,
      "generators": [{"name": "t", "value": [1]}, {"name": "T", "value": [-1]}]})");
  CHECK(closed.gens.size() == 2);
  CHECK(closed.gens.name(1) == "T");
  CHECK(parse_error(R"({"group": {"type": "free_abelian", "rank": 1}, "close_under_inversion": false,
                        "generators": [{"name": "t", "value": [1]}]})")
            .find("/generators") != std::string::npos);
}

TEST_CASE("errors carry a location") {
  CHECK(parse_error("{\"group\": ").find("doc:") == 0);
  CHECK(parse_error(R"({"group": {"type": "free_abelian", "rank": 1}})").find("generators") != std::string::npos);
  CHECK(parse_error(R"({"group": {"type": "lie"}, "generators": []})").find("/group/type") != std::string::npos);
  const auto bad_vec = parse_error(R"({"group": {"type": "free_abelian", "rank": 2},
                                       "generators": [{"name": "t", "value": [1]}]})");
  CHECK(bad_vec.find("/generators/0/value") != std::string::npos);
  CHECK(parse_error(R"({"group": {"type": "free_abelian", "rank": 1}, "generators": [], "colour": 1})")
            .find("colour") != std::string::npos);
  CHECK(parse_error(R"({"group": {"type": "finite", "table": [[0, 1], [1, 1]]}, "generators": []})") != "");
}

TEST_CASE("value encoding round trip") {
  for (const char* name : {"z2", "f2-extended", "dinf", "z-z2", "dinf-x-z", "f2-product"}) {
    CAPTURE(name);
    const auto doc = test::preset(name);
    const Ball ball = Ball::build(doc.gens, 3);
    for (Ball::Index i = 0; i < ball.size(); ++i) CHECK(parse_value(doc.spec, value_json(doc.spec, ball.value(i))) == ball.value(i));
  }
  const auto f2 = test::preset("f2-basis");
  CHECK(value_json(f2.spec, parse_value(f2.spec, "\"xyYx\"")) == "\"xx\"");
  CHECK(value_json(f2.spec, identity(f2.spec)) == "\"1\"");
}
