#pragma once

#include "pascal/abelian.hpp"
#include "pascal/automata.hpp"
#include "pascal/cayley.hpp"
#include "pascal/errors.hpp"
#include "pascal/formulas.hpp"
#include "pascal/groups.hpp"
#include "pascal/spec_file.hpp"

#include <set>
#include <string>

namespace test {

inline pascal::SpecDocument preset(const std::string& name) { return pascal::load_preset(name, PASCAL_PRESET_DIR); }

inline pascal::SpecDocument parse(const std::string& json) { return pascal::parse_spec(json, "test"); }

inline pascal::GroupValue value(const pascal::SpecDocument& doc, const std::string& json) {
  return pascal::parse_value(doc.spec, json);
}

inline pascal::Ball::Index find(const pascal::Ball& ball, const pascal::GroupValue& v) {
  auto i = ball.find(v);
  if (!i) throw pascal::InsufficientRadius("value outside the test ball");
  return *i;
}

}  // namespace test
