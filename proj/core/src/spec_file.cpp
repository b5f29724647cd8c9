#include "pascal/spec_file.hpp"

#include "pascal/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace pascal {

namespace {

using nlohmann::json;

struct Context {
  std::string origin;

  [[noreturn]] void fail(const std::string& pointer, const std::string& what) const {
    throw ParseError(origin + ": at " + (pointer.empty() ? "/" : pointer) + ": " + what);
  }

  const json& need(const json& j, const char* key, const std::string& at) const {
    if (!j.is_object()) fail(at, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(at, std::string("missing key \"") + key + "\"");
    return *it;
  }

  std::int64_t integer(const json& j, const std::string& at) const {
    if (!j.is_number_integer()) fail(at, "expected an integer");
    return j.get<std::int64_t>();
  }

  std::size_t count(const json& j, const std::string& at) const {
    const auto v = integer(j, at);
    if (v < 0) fail(at, "expected a nonnegative integer");
    return static_cast<std::size_t>(v);
  }
};

json parse_json(const std::string& text, const Context& ctx) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(ctx.origin + ": syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

GroupSpec group_from(const json& j, const std::string& at, const Context& ctx) {
  const auto& type = ctx.need(j, "type", at);
  if (!type.is_string()) ctx.fail(at + "/type", "expected a string");
  const auto t = type.get<std::string>();
  try {
    if (t == "finite") {
      if (j.contains("cyclic")) {
        const auto n = ctx.count(j["cyclic"], at + "/cyclic");
        if (n == 0) ctx.fail(at + "/cyclic", "order must be positive");
        return GroupSpec::cyclic(static_cast<std::uint32_t>(n));
      }
      const auto& table = ctx.need(j, "table", at);
      if (!table.is_array()) ctx.fail(at + "/table", "expected an array of rows");
      std::vector<std::vector<std::uint32_t>> rows;
      for (std::size_t i = 0; i < table.size(); ++i) {
        const std::string rat = at + "/table/" + std::to_string(i);
        if (!table[i].is_array()) ctx.fail(rat, "expected a row");
        std::vector<std::uint32_t> row;
        for (std::size_t c = 0; c < table[i].size(); ++c)
          row.push_back(static_cast<std::uint32_t>(ctx.count(table[i][c], rat + "/" + std::to_string(c))));
        rows.push_back(std::move(row));
      }
      return GroupSpec::finite(std::move(rows));
    }
    if (t == "free_abelian") return GroupSpec::free_abelian(ctx.count(ctx.need(j, "rank", at), at + "/rank"));
    if (t == "free") {
      const auto rank = ctx.count(ctx.need(j, "rank", at), at + "/rank");
      std::string letters;
      if (j.contains("letters")) {
        if (!j["letters"].is_string()) ctx.fail(at + "/letters", "expected a string");
        letters = j["letters"].get<std::string>();
      }
      return GroupSpec::free(rank, letters);
    }
    if (t == "direct_product" || t == "free_product") {
      GroupSpec l = group_from(ctx.need(j, "left", at), at + "/left", ctx);
      GroupSpec r = group_from(ctx.need(j, "right", at), at + "/right", ctx);
      return t == "direct_product" ? GroupSpec::direct_product(l, r) : GroupSpec::free_product(l, r);
    }
  } catch (const StructuralError& e) {
    ctx.fail(at, e.what());
  }
  ctx.fail(at + "/type", "unknown group type \"" + t + "\"");
}

GroupValue value_from(const GroupSpec& spec, const json& j, const std::string& at, const Context& ctx) {
  switch (spec.kind()) {
    case GroupKind::Finite: {
      const auto i = ctx.count(j, at);
      if (i >= spec.order()) ctx.fail(at, "element index " + std::to_string(i) + " out of range");
      return GroupValue::element(static_cast<std::uint32_t>(i));
    }
    case GroupKind::FreeAbelian: {
      if (!j.is_array() || j.size() != spec.rank())
        ctx.fail(at, "expected an array of " + std::to_string(spec.rank()) + " integers");
      std::vector<std::int64_t> c;
      for (std::size_t i = 0; i < j.size(); ++i) c.push_back(ctx.integer(j[i], at + "/" + std::to_string(i)));
      return GroupValue::vector(std::move(c));
    }
    case GroupKind::Free: {
      if (!j.is_string()) ctx.fail(at, "expected a string of basis letters");
      const auto s = j.get<std::string>();
      GroupValue g = identity(spec);
      if (s == "1") return g;
      for (char ch : s) {
        const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        const auto pos = spec.letters().find(lower);
        if (pos == std::string::npos) ctx.fail(at, std::string("unknown letter '") + ch + "'");
        const auto letter = static_cast<std::int64_t>(pos + 1);
        g = multiply(spec, g, GroupValue::word({ch == lower ? letter : -letter}));
      }
      return g;
    }
    case GroupKind::DirectProduct: {
      if (!j.is_array() || j.size() != 2) ctx.fail(at, "expected [left, right]");
      return GroupValue::pair(value_from(spec.left(), j[0], at + "/0", ctx),
                              value_from(spec.right(), j[1], at + "/1", ctx));
    }
    case GroupKind::FreeProduct: {
      if (!j.is_array()) ctx.fail(at, "expected an array of {\"left\": v} / {\"right\": v} syllables");
      GroupValue g = identity(spec);
      for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string sat = at + "/" + std::to_string(i);
        const auto& s = j[i];
        if (!s.is_object() || s.size() != 1 || !(s.contains("left") || s.contains("right")))
          ctx.fail(sat, "expected {\"left\": v} or {\"right\": v}");
        const Side side = s.contains("left") ? Side::Left : Side::Right;
        const GroupValue part = value_from(spec.factor(side), s.begin().value(), sat + "/" + s.begin().key(), ctx);
        if (is_identity(part)) continue;
        g = multiply(spec, g, GroupValue::syllables({side}, {part}));
      }
      return g;
    }
  }
  ctx.fail(at, "unsupported group");
}

json value_to(const GroupSpec& spec, const GroupValue& v) {
  switch (spec.kind()) {
    case GroupKind::Finite: return v.index();
    case GroupKind::FreeAbelian: {
      json a = json::array();
      for (auto c : v.coords()) a.push_back(c);
      return a;
    }
    case GroupKind::Free: {
      std::string s;
      for (auto l : v.letters()) {
        const char c = spec.letters().at(static_cast<std::size_t>(std::abs(l)) - 1);
        s += l > 0 ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      }
      return s.empty() ? "1" : s;
    }
    case GroupKind::DirectProduct: return json::array({value_to(spec.left(), v.left()), value_to(spec.right(), v.right())});
    case GroupKind::FreeProduct: {
      json a = json::array();
      for (std::size_t i = 0; i < v.syllable_count(); ++i) {
        const Side side = v.syllable_side(i);
        a.push_back({{side == Side::Left ? "left" : "right", value_to(spec.factor(side), v.syllable(i))}});
      }
      return a;
    }
  }
  return nullptr;
}

}  // namespace

SpecDocument parse_spec(const std::string& text, const std::string& origin) {
  const Context ctx{origin};
  const json doc = parse_json(text, ctx);
  if (!doc.is_object()) ctx.fail("", "expected an object");
  for (const auto& [k, _] : doc.items())
    if (k != "name" && k != "description" && k != "group" && k != "generators" && k != "close_under_inversion" &&
        k != "automaton")
      ctx.fail("/" + k, "unknown key");
  GroupSpec spec = group_from(ctx.need(doc, "group", ""), "/group", ctx);

  const auto& gj = ctx.need(doc, "generators", "");
  if (!gj.is_array()) ctx.fail("/generators", "expected an array");
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < gj.size(); ++i) {
    const std::string at = "/generators/" + std::to_string(i);
    const auto& name = ctx.need(gj[i], "name", at);
    if (!name.is_string()) ctx.fail(at + "/name", "expected a string");
    gens.push_back({name.get<std::string>(), value_from(spec, ctx.need(gj[i], "value", at), at + "/value", ctx)});
  }
  bool close = true;
  if (doc.contains("close_under_inversion")) {
    if (!doc["close_under_inversion"].is_boolean()) ctx.fail("/close_under_inversion", "expected a boolean");
    close = doc["close_under_inversion"].get<bool>();
  }

  AutomatonHints hints;
  if (doc.contains("automaton")) {
    const auto& a = doc["automaton"];
    if (!a.is_object()) ctx.fail("/automaton", "expected an object");
    if (a.contains("train_radius")) hints.train_radius = ctx.count(a["train_radius"], "/automaton/train_radius");
    if (a.contains("cone_radius")) hints.cone_radius = ctx.count(a["cone_radius"], "/automaton/cone_radius");
  }

  std::string name = origin;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) ctx.fail("/name", "expected a string");
    name = doc["name"].get<std::string>();
  }
  try {
    GenSet set = close ? close_under_inversion(spec, std::move(gens)) : GenSet(spec, std::move(gens));
    return SpecDocument{std::move(name), spec, std::move(set), hints};
  } catch (const StructuralError& e) {
    ctx.fail("/generators", e.what());
  }
}

SpecDocument load_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str(), path.string());
}

SpecDocument load_preset(const std::string& name, const std::filesystem::path& dir) {
  const auto path = dir / (name + ".json");
  if (!std::filesystem::exists(path)) {
    std::string known;
    for (const auto& n : preset_names(dir)) known += (known.empty() ? "" : ", ") + n;
    throw ParseError("unknown preset '" + name + "' (known: " + known + ")");
  }
  return load_spec_file(path);
}

std::vector<std::string> preset_names(const std::filesystem::path& dir) {
  std::vector<std::string> out;
  std::error_code ec;
  for (const auto& e : std::filesystem::directory_iterator(dir, ec))
    if (e.path().extension() == ".json") out.push_back(e.path().stem().string());
  std::sort(out.begin(), out.end());
  return out;
}

GroupValue parse_value(const GroupSpec& spec, const std::string& json_text) {
  const Context ctx{"value"};
  return value_from(spec, parse_json(json_text, ctx), "", ctx);
}

std::string value_json(const GroupSpec& spec, const GroupValue& v) { return value_to(spec, v).dump(); }

}  // namespace pascal
