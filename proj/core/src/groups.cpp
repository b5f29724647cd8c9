#include "pascal/groups.hpp"

#include "pascal/errors.hpp"
#include "pascal/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace pascal {

struct GroupSpec::Node {
  GroupKind kind = GroupKind::Finite;
  std::size_t rank = 0;
  std::string letters;
  std::vector<std::vector<std::uint32_t>> table;
  std::vector<std::uint32_t> inverse;
  bool commutative = true;
  std::unique_ptr<GroupSpec> left_spec;
  std::unique_ptr<GroupSpec> right_spec;
};

namespace {

[[noreturn]] void structural(const std::string& what) { throw StructuralError(what); }

const char* kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::Finite: return "finite";
    case GroupKind::FreeAbelian: return "free_abelian";
    case GroupKind::Free: return "free";
    case GroupKind::DirectProduct: return "direct_product";
    case GroupKind::FreeProduct: return "free_product";
  }
  return "?";
}

void expect_kind(const GroupSpec& spec, const GroupValue& v) {
  if (v.kind() != spec.kind())
    structural(std::string("value of kind ") + kind_name(v.kind()) + " used with " +
               kind_name(spec.kind()) + " group " + spec.describe());
}

void put_varint(std::string& out, std::uint64_t x) {
  while (x >= 0x80) {
    out.push_back(static_cast<char>((x & 0x7f) | 0x80));
    x >>= 7;
  }
  out.push_back(static_cast<char>(x));
}

std::uint64_t get_varint(std::string_view& in) {
  std::uint64_t x = 0;
  int shift = 0;
  while (true) {
    if (in.empty()) throw ParseError("truncated element key");
    const auto byte = static_cast<std::uint8_t>(in.front());
    in.remove_prefix(1);
    x |= static_cast<std::uint64_t>(byte & 0x7f) << shift;
    if ((byte & 0x80) == 0) return x;
    shift += 7;
  }
}

std::uint64_t zigzag(std::int64_t v) {
  return (static_cast<std::uint64_t>(v) << 1) ^ static_cast<std::uint64_t>(v >> 63);
}

std::int64_t unzigzag(std::uint64_t u) {
  return static_cast<std::int64_t>(u >> 1) ^ -static_cast<std::int64_t>(u & 1);
}

void hash_mix(std::size_t& seed, std::size_t x) {
  seed ^= x + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace

// ---------------------------------------------------------------- GroupSpec

GroupSpec GroupSpec::finite(std::vector<std::vector<std::uint32_t>> table) {
  const std::size_t m = table.size();
  if (m == 0) structural("finite group table is empty");
  for (const auto& row : table) {
    if (row.size() != m) structural("finite group table is not square");
    for (auto x : row)
      if (x >= m) structural("finite group table entry out of range");
  }
  for (std::uint32_t j = 0; j < m; ++j)
    if (table[0][j] != j || table[j][0] != j) structural("index 0 of a finite group table must be the identity");
  auto node = std::make_shared<Node>();
  node->kind = GroupKind::Finite;
  node->inverse.assign(m, 0);
  for (std::uint32_t a = 0; a < m; ++a) {
    std::vector<bool> seen_row(m, false);
    std::vector<bool> seen_col(m, false);
    std::optional<std::uint32_t> inv;
    for (std::uint32_t b = 0; b < m; ++b) {
      if (seen_row[table[a][b]] || seen_col[table[b][a]]) structural("finite group table is not a Latin square");
      seen_row[table[a][b]] = true;
      seen_col[table[b][a]] = true;
      if (table[a][b] == 0) inv = b;
    }
    node->inverse[a] = *inv;
    if (table[*inv][a] != 0) structural("finite group table has inconsistent inverses");
  }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (table[a][b] != table[b][a]) node->commutative = false;
      for (std::size_t c = 0; c < m; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]]) structural("finite group table is not associative");
    }
  node->table = std::move(table);
  return GroupSpec(std::move(node));
}

GroupSpec GroupSpec::cyclic(std::uint32_t n) {
  if (n == 0) structural("cyclic group order must be positive");
  std::vector<std::vector<std::uint32_t>> t(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return finite(std::move(t));
}

GroupSpec GroupSpec::free_abelian(std::size_t rank) {
  auto node = std::make_shared<Node>();
  node->kind = GroupKind::FreeAbelian;
  node->rank = rank;
  return GroupSpec(std::move(node));
}

GroupSpec GroupSpec::free(std::size_t rank, std::string letters) {
  if (letters.empty()) {
    if (rank > 26) structural("free group rank above 26 needs explicit letters");
    for (std::size_t i = 0; i < rank; ++i) letters.push_back(static_cast<char>('a' + i));
  }
  if (letters.size() != rank) structural("free group needs one basis letter per rank");
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (!std::islower(static_cast<unsigned char>(letters[i]))) structural("free group basis letters must be lowercase a-z");
    if (letters.find(letters[i], i + 1) != std::string::npos) structural("free group basis letters must be distinct");
  }
  auto node = std::make_shared<Node>();
  node->kind = GroupKind::Free;
  node->rank = rank;
  node->letters = std::move(letters);
  return GroupSpec(std::move(node));
}

GroupSpec GroupSpec::direct_product(GroupSpec left, GroupSpec right) {
  auto node = std::make_shared<Node>();
  node->kind = GroupKind::DirectProduct;
  node->left_spec = std::make_unique<GroupSpec>(std::move(left));
  node->right_spec = std::make_unique<GroupSpec>(std::move(right));
  return GroupSpec(std::move(node));
}

GroupSpec GroupSpec::free_product(GroupSpec left, GroupSpec right) {
  auto node = std::make_shared<Node>();
  node->kind = GroupKind::FreeProduct;
  node->left_spec = std::make_unique<GroupSpec>(std::move(left));
  node->right_spec = std::make_unique<GroupSpec>(std::move(right));
  return GroupSpec(std::move(node));
}

GroupKind GroupSpec::kind() const { return node().kind; }

std::size_t GroupSpec::rank() const {
  if (kind() != GroupKind::FreeAbelian && kind() != GroupKind::Free) structural("rank() on a non-free group");
  return node().rank;
}

const std::string& GroupSpec::letters() const { return node().letters; }

std::uint32_t GroupSpec::order() const {
  if (kind() != GroupKind::Finite) structural("order() on an infinite group");
  return static_cast<std::uint32_t>(node().table.size());
}

std::uint32_t GroupSpec::product(std::uint32_t a, std::uint32_t b) const { return node().table.at(a).at(b); }
std::uint32_t GroupSpec::inverse_index(std::uint32_t a) const { return node().inverse.at(a); }
bool GroupSpec::is_commutative() const { return node().commutative; }
const std::vector<std::vector<std::uint32_t>>& GroupSpec::table() const { return node().table; }

const GroupSpec& GroupSpec::left() const {
  if (!node().left_spec) structural("left() on a group that is not a product");
  return *node().left_spec;
}

const GroupSpec& GroupSpec::right() const {
  if (!node().right_spec) structural("right() on a group that is not a product");
  return *node().right_spec;
}

std::string GroupSpec::describe() const {
  switch (kind()) {
    case GroupKind::Finite: return "Fin" + std::to_string(order());
    case GroupKind::FreeAbelian: return "Z^" + std::to_string(rank());
    case GroupKind::Free: return "F(" + letters() + ")";
    case GroupKind::DirectProduct: return "(" + left().describe() + " x " + right().describe() + ")";
    case GroupKind::FreeProduct: return "(" + left().describe() + " * " + right().describe() + ")";
  }
  return "?";
}

bool operator==(const GroupSpec& a, const GroupSpec& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case GroupKind::Finite: return a.table() == b.table();
    case GroupKind::FreeAbelian: return a.rank() == b.rank();
    case GroupKind::Free: return a.letters() == b.letters();
    case GroupKind::DirectProduct:
    case GroupKind::FreeProduct: return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

// --------------------------------------------------------------- GroupValue

GroupValue GroupValue::element(std::uint32_t index) {
  GroupValue v;
  v.kind_ = GroupKind::Finite;
  v.data_ = {static_cast<std::int64_t>(index)};
  return v;
}

GroupValue GroupValue::vector(std::vector<std::int64_t> coords) {
  GroupValue v;
  v.kind_ = GroupKind::FreeAbelian;
  v.data_ = std::move(coords);
  return v;
}

GroupValue GroupValue::word(std::vector<std::int64_t> letters) {
  GroupValue v;
  v.kind_ = GroupKind::Free;
  v.data_ = std::move(letters);
  return v;
}

GroupValue GroupValue::pair(GroupValue left, GroupValue right) {
  GroupValue v;
  v.kind_ = GroupKind::DirectProduct;
  v.data_.clear();
  v.parts_.reserve(2);
  v.parts_.push_back(std::move(left));
  v.parts_.push_back(std::move(right));
  return v;
}

GroupValue GroupValue::syllables(std::vector<Side> sides, std::vector<GroupValue> parts) {
  if (sides.size() != parts.size()) structural("syllable sides and parts differ in length");
  GroupValue v;
  v.kind_ = GroupKind::FreeProduct;
  v.data_.clear();
  for (Side s : sides) v.data_.push_back(static_cast<std::int64_t>(s));
  v.parts_ = std::move(parts);
  return v;
}

std::size_t GroupValue::hash() const {
  std::size_t seed = static_cast<std::size_t>(kind_) * 0x51ed27ULL;
  for (auto x : data_) hash_mix(seed, std::hash<std::int64_t>{}(x));
  for (const auto& p : parts_) hash_mix(seed, p.hash());
  return seed;
}

// ------------------------------------------------------------------ algebra

GroupValue identity(const GroupSpec& spec) {
  switch (spec.kind()) {
    case GroupKind::Finite: return GroupValue::element(0);
    case GroupKind::FreeAbelian: return GroupValue::vector(std::vector<std::int64_t>(spec.rank(), 0));
    case GroupKind::Free: return GroupValue::word({});
    case GroupKind::DirectProduct: return GroupValue::pair(identity(spec.left()), identity(spec.right()));
    case GroupKind::FreeProduct: return GroupValue::syllables({}, {});
  }
  return {};
}

bool is_identity(const GroupValue& v) {
  switch (v.kind()) {
    case GroupKind::Finite: return v.index() == 0;
    case GroupKind::FreeAbelian:
      return std::all_of(v.coords().begin(), v.coords().end(), [](std::int64_t x) { return x == 0; });
    case GroupKind::Free: return v.letters().empty();
    case GroupKind::DirectProduct: return is_identity(v.left()) && is_identity(v.right());
    case GroupKind::FreeProduct: return v.syllable_count() == 0;
  }
  return false;
}

void validate(const GroupSpec& spec, const GroupValue& v) {
  expect_kind(spec, v);
  switch (spec.kind()) {
    case GroupKind::Finite:
      if (v.coords().size() != 1 || v.index() >= spec.order())
        structural("finite element index out of range for " + spec.describe());
      return;
    case GroupKind::FreeAbelian:
      if (v.coords().size() != spec.rank())
        structural("vector of length " + std::to_string(v.coords().size()) + " used with " + spec.describe());
      return;
    case GroupKind::Free: {
      const auto w = v.letters();
      const auto r = static_cast<std::int64_t>(spec.rank());
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0 || w[i] > r || w[i] < -r) structural("free letter out of range for " + spec.describe());
        if (i > 0 && w[i] == -w[i - 1]) structural("free word is not reduced");
      }
      return;
    }
    case GroupKind::DirectProduct:
      validate(spec.left(), v.left());
      validate(spec.right(), v.right());
      return;
    case GroupKind::FreeProduct:
      for (std::size_t i = 0; i < v.syllable_count(); ++i) {
        if (i > 0 && v.syllable_side(i) == v.syllable_side(i - 1)) structural("free product syllables do not alternate");
        const auto& factor = spec.factor(v.syllable_side(i));
        validate(factor, v.syllable(i));
        if (is_identity(v.syllable(i))) structural("free product syllable is the identity");
      }
      return;
  }
}

bool is_valid(const GroupSpec& spec, const GroupValue& v) {
  try {
    validate(spec, v);
    return true;
  } catch (const StructuralError&) {
    return false;
  }
}

GroupValue multiply(const GroupSpec& spec, const GroupValue& a, const GroupValue& b) {
  expect_kind(spec, a);
  expect_kind(spec, b);
  switch (spec.kind()) {
    case GroupKind::Finite: return GroupValue::element(spec.product(a.index(), b.index()));
    case GroupKind::FreeAbelian: {
      if (a.coords().size() != spec.rank() || b.coords().size() != spec.rank())
        structural("vector rank mismatch in " + spec.describe());
      std::vector<std::int64_t> out(a.coords().begin(), a.coords().end());
      for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.coords()[i];
      return GroupValue::vector(std::move(out));
    }
    case GroupKind::Free: {
      std::vector<std::int64_t> out(a.letters().begin(), a.letters().end());
      for (auto x : b.letters()) {
        if (!out.empty() && out.back() == -x)
          out.pop_back();
        else
          out.push_back(x);
      }
      return GroupValue::word(std::move(out));
    }
    case GroupKind::DirectProduct:
      return GroupValue::pair(multiply(spec.left(), a.left(), b.left()), multiply(spec.right(), a.right(), b.right()));
    case GroupKind::FreeProduct: {
      std::vector<Side> sides;
      std::vector<GroupValue> parts;
      for (std::size_t i = 0; i < a.syllable_count(); ++i) {
        sides.push_back(a.syllable_side(i));
        parts.push_back(a.syllable(i));
      }
      for (std::size_t i = 0; i < b.syllable_count(); ++i) {
        const Side s = b.syllable_side(i);
        if (!sides.empty() && sides.back() == s) {
          GroupValue merged = multiply(spec.factor(s), parts.back(), b.syllable(i));
          if (is_identity(merged)) {
            sides.pop_back();
            parts.pop_back();
          } else {
            parts.back() = std::move(merged);
          }
        } else {
          sides.push_back(s);
          parts.push_back(b.syllable(i));
        }
      }
      return GroupValue::syllables(std::move(sides), std::move(parts));
    }
  }
  return {};
}

GroupValue inverse(const GroupSpec& spec, const GroupValue& a) {
  expect_kind(spec, a);
  switch (spec.kind()) {
    case GroupKind::Finite: return GroupValue::element(spec.inverse_index(a.index()));
    case GroupKind::FreeAbelian: {
      std::vector<std::int64_t> out(a.coords().begin(), a.coords().end());
      for (auto& x : out) x = -x;
      return GroupValue::vector(std::move(out));
    }
    case GroupKind::Free: {
      std::vector<std::int64_t> out(a.letters().rbegin(), a.letters().rend());
      for (auto& x : out) x = -x;
      return GroupValue::word(std::move(out));
    }
    case GroupKind::DirectProduct:
      return GroupValue::pair(inverse(spec.left(), a.left()), inverse(spec.right(), a.right()));
    case GroupKind::FreeProduct: {
      std::vector<Side> sides;
      std::vector<GroupValue> parts;
      for (std::size_t i = a.syllable_count(); i-- > 0;) {
        sides.push_back(a.syllable_side(i));
        parts.push_back(inverse(spec.factor(a.syllable_side(i)), a.syllable(i)));
      }
      return GroupValue::syllables(std::move(sides), std::move(parts));
    }
  }
  return {};
}

GroupValue power(const GroupSpec& spec, const GroupValue& a, std::int64_t n) {
  GroupValue base = n < 0 ? inverse(spec, a) : a;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  GroupValue result = identity(spec);
  while (e > 0) {
    if (e & 1) result = multiply(spec, result, base);
    e >>= 1;
    if (e > 0) base = multiply(spec, base, base);
  }
  return result;
}

std::string to_string(const GroupSpec& spec, const GroupValue& v) {
  expect_kind(spec, v);
  switch (spec.kind()) {
    case GroupKind::Finite: return "[" + std::to_string(v.index()) + "]";
    case GroupKind::FreeAbelian: {
      std::string s = "(";
      for (std::size_t i = 0; i < v.coords().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v.coords()[i]);
      }
      return s + ")";
    }
    case GroupKind::Free: {
      if (v.letters().empty()) return "1";
      std::string s;
      for (auto x : v.letters()) {
        const char c = spec.letters().at(static_cast<std::size_t>((x < 0 ? -x : x) - 1));
        s.push_back(x < 0 ? static_cast<char>(std::toupper(static_cast<unsigned char>(c))) : c);
      }
      return s;
    }
    case GroupKind::DirectProduct:
      return "<" + to_string(spec.left(), v.left()) + "," + to_string(spec.right(), v.right()) + ">";
    case GroupKind::FreeProduct: {
      if (v.syllable_count() == 0) return "1";
      std::string s;
      for (std::size_t i = 0; i < v.syllable_count(); ++i) {
        if (i) s += "*";
        const Side side = v.syllable_side(i);
        const auto& factor = spec.factor(side);
        std::string body = to_string(factor, v.syllable(i));
        if (factor.kind() == GroupKind::FreeProduct) body = "(" + body + ")";
        s += (side == Side::Left ? "L" : "R") + body;
      }
      return s;
    }
  }
  return "?";
}

void encode_key(const GroupValue& v, std::string& out) {
  switch (v.kind()) {
    case GroupKind::Finite: put_varint(out, v.index()); return;
    case GroupKind::FreeAbelian:
      for (auto x : v.coords()) put_varint(out, zigzag(x));
      return;
    case GroupKind::Free:
      put_varint(out, v.letters().size());
      for (auto x : v.letters()) put_varint(out, zigzag(x));
      return;
    case GroupKind::DirectProduct:
      encode_key(v.left(), out);
      encode_key(v.right(), out);
      return;
    case GroupKind::FreeProduct:
      put_varint(out, v.syllable_count());
      if (v.syllable_count() > 0) out.push_back(static_cast<char>(v.syllable_side(0)));
      for (std::size_t i = 0; i < v.syllable_count(); ++i) encode_key(v.syllable(i), out);
      return;
  }
}

std::string encode_key(const GroupValue& v) {
  std::string out;
  encode_key(v, out);
  return out;
}

GroupValue decode_key(const GroupSpec& spec, std::string_view& in) {
  switch (spec.kind()) {
    case GroupKind::Finite: return GroupValue::element(static_cast<std::uint32_t>(get_varint(in)));
    case GroupKind::FreeAbelian: {
      std::vector<std::int64_t> c(spec.rank());
      for (auto& x : c) x = unzigzag(get_varint(in));
      return GroupValue::vector(std::move(c));
    }
    case GroupKind::Free: {
      std::vector<std::int64_t> w(get_varint(in));
      for (auto& x : w) x = unzigzag(get_varint(in));
      return GroupValue::word(std::move(w));
    }
    case GroupKind::DirectProduct: {
      GroupValue l = decode_key(spec.left(), in);
      GroupValue r = decode_key(spec.right(), in);
      return GroupValue::pair(std::move(l), std::move(r));
    }
    case GroupKind::FreeProduct: {
      const auto n = get_varint(in);
      std::vector<Side> sides;
      std::vector<GroupValue> parts;
      if (n > 0) {
        if (in.empty()) throw ParseError("truncated element key");
        Side s = static_cast<Side>(in.front());
        in.remove_prefix(1);
        for (std::uint64_t i = 0; i < n; ++i) {
          sides.push_back(s);
          parts.push_back(decode_key(spec.factor(s), in));
          s = s == Side::Left ? Side::Right : Side::Left;
        }
      }
      return GroupValue::syllables(std::move(sides), std::move(parts));
    }
  }
  return {};
}

// ------------------------------------------------------------------- GenSet

GenSet::GenSet(GroupSpec spec, std::vector<Generator> gens) : spec_(std::move(spec)), gens_(std::move(gens)) {
  std::unordered_map<GroupValue, GenIndex, GroupValueHash> by_value;
  std::unordered_set<std::string> names;
  for (GenIndex i = 0; i < gens_.size(); ++i) {
    const auto& g = gens_[i];
    if (g.name.empty()) structural("generator " + std::to_string(i) + " has an empty name");
    if (g.name.find_first_of(" \t\r\n") != std::string::npos) structural("generator name '" + g.name + "' contains whitespace");
    if (!names.insert(g.name).second) structural("generator name '" + g.name + "' repeated");
    validate(spec_, g.value);
    if (is_identity(g.value)) structural("generator '" + g.name + "' is the identity");
    if (!by_value.emplace(g.value, i).second)
      structural("generators '" + gens_[by_value[g.value]].name + "' and '" + g.name + "' share a value");
  }
  inverse_.resize(gens_.size());
  for (GenIndex i = 0; i < gens_.size(); ++i) {
    auto it = by_value.find(pascal::inverse(spec_, gens_[i].value));
    if (it == by_value.end()) structural("generating set not closed under inversion: inverse of '" + gens_[i].name + "' missing");
    inverse_[i] = it->second;
  }
}

std::optional<GenIndex> GenSet::find(std::string_view name) const {
  for (GenIndex i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return i;
  return std::nullopt;
}

std::optional<GenIndex> GenSet::find(const GroupValue& value) const {
  for (GenIndex i = 0; i < gens_.size(); ++i)
    if (gens_[i].value == value) return i;
  return std::nullopt;
}

GenSet close_under_inversion(const GroupSpec& spec, std::vector<Generator> gens) {
  std::unordered_set<GroupValue, GroupValueHash> values;
  for (const auto& g : gens) {
    validate(spec, g.value);
    if (is_identity(g.value)) structural("generator '" + g.name + "' is the identity");
    if (!values.insert(g.value).second) structural("generator '" + g.name + "' repeats an earlier value");
  }
  const std::size_t original = gens.size();
  for (std::size_t i = 0; i < original; ++i) {
    GroupValue inv = inverse(spec, gens[i].value);
    if (values.insert(inv).second) gens.push_back({gens[i].name + "^-1", std::move(inv)});
  }
  return GenSet(spec, std::move(gens));
}

GroupValue evaluate(const GenSet& gens, const Word& w) {
  GroupValue acc = identity(gens.spec());
  for (GenIndex i : w) {
    if (i >= gens.size()) structural("word letter " + std::to_string(i) + " out of range");
    acc = multiply(gens.spec(), acc, gens.value(i));
  }
  return acc;
}

Word parse_word(const GenSet& gens, std::string_view text) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    auto i = gens.find(tok);
    if (!i) throw ParseError("unknown generator '" + tok + "' in word");
    w.push_back(*i);
  }
  return w;
}

std::string format_word(const GenSet& gens, const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += " ";
    s += gens.name(w[i]);
  }
  return s;
}

// --------------------------------------------------------------- generation

namespace {

std::vector<bool> finite_closure(const GroupSpec& fin, const std::vector<std::uint32_t>& seeds) {
  std::vector<bool> in(fin.order(), false);
  std::deque<std::uint32_t> queue{0};
  in[0] = true;
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    for (auto s : seeds) {
      for (auto y : {fin.product(x, s), fin.product(x, fin.inverse_index(s))}) {
        if (!in[y]) {
          in[y] = true;
          queue.push_back(y);
        }
      }
    }
  }
  return in;
}

std::uint32_t finite_power(const GroupSpec& fin, std::uint32_t a, const BigCount& n) {
  const BigCount m = n % fin.order();
  auto e = static_cast<std::uint32_t>(m < 0 ? m + fin.order() : m);
  std::uint32_t r = 0;
  for (std::uint32_t i = 0; i < e; ++i) r = fin.product(r, a);
  return r;
}

// Sufficient test: the values lying inside single factors already generate
// each factor. Free factors need their basis letters among the values.
bool covers(const GroupSpec& spec, const std::vector<GroupValue>& values) {
  switch (spec.kind()) {
    case GroupKind::Finite: {
      std::vector<std::uint32_t> seeds;
      for (const auto& v : values) seeds.push_back(v.index());
      auto in = finite_closure(spec, seeds);
      return std::all_of(in.begin(), in.end(), [](bool b) { return b; });
    }
    case GroupKind::FreeAbelian: {
      lattice::IntMatrix rows;
      for (const auto& v : values) rows.emplace_back(v.coords().begin(), v.coords().end());
      const auto idx = lattice::index(lattice::echelon(rows, spec.rank()));
      return idx && *idx == 1;
    }
    case GroupKind::Free: {
      std::vector<bool> hit(spec.rank(), false);
      for (const auto& v : values)
        if (v.letters().size() == 1) hit[static_cast<std::size_t>(std::abs(v.letters()[0])) - 1] = true;
      return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    }
    case GroupKind::DirectProduct: {
      std::vector<GroupValue> l, r;
      for (const auto& v : values) {
        if (is_identity(v.right())) l.push_back(v.left());
        if (is_identity(v.left())) r.push_back(v.right());
      }
      return covers(spec.left(), l) && covers(spec.right(), r);
    }
    case GroupKind::FreeProduct: {
      std::vector<GroupValue> l, r;
      for (const auto& v : values)
        if (v.syllable_count() == 1) (v.syllable_side(0) == Side::Left ? l : r).push_back(v.syllable(0));
      return covers(spec.left(), l) && covers(spec.right(), r);
    }
  }
  return false;
}

}  // namespace

GenerationCheck check_generation(const GenSet& gens) {
  const GroupSpec& spec = gens.spec();
  GenerationCheck out;
  if (spec.kind() == GroupKind::Finite) {
    std::vector<std::uint32_t> seeds;
    for (const auto& g : gens.entries()) seeds.push_back(g.value.index());
    auto in = finite_closure(spec, seeds);
    const bool all = std::all_of(in.begin(), in.end(), [](bool b) { return b; });
    out.status = all ? GenerationCheck::Status::Verified : GenerationCheck::Status::NotGenerating;
    out.note = all ? "generates the finite group" : "generators miss part of the finite group";
    return out;
  }
  const bool plain = spec.kind() == GroupKind::FreeAbelian;
  const bool with_finite = spec.kind() == GroupKind::DirectProduct && spec.left().kind() == GroupKind::FreeAbelian &&
                           spec.right().kind() == GroupKind::Finite && spec.right().is_commutative();
  if (!plain && !with_finite) {
    std::vector<GroupValue> values;
    for (const auto& g : gens.entries()) values.push_back(g.value);
    if (covers(spec, values)) {
      out.status = GenerationCheck::Status::Verified;
      out.note = "generators of every factor are present";
      return out;
    }
    out.status = GenerationCheck::Status::Unchecked;
    out.note = "generation not verified for " + spec.describe() + "; balls describe the generated subgroup";
    return out;
  }
  const std::size_t n = plain ? spec.rank() : spec.left().rank();
  lattice::IntMatrix rows;
  for (const auto& g : gens.entries()) {
    const auto c = plain ? g.value.coords() : g.value.left().coords();
    rows.emplace_back(c.begin(), c.end());
  }
  const auto proj = lattice::echelon(rows, n);
  const auto idx = lattice::index(proj);
  if (!idx || *idx != 1) {
    out.status = GenerationCheck::Status::NotGenerating;
    out.note = idx ? "projection to Z^" + std::to_string(n) + " has index " + idx->str()
                   : "projection to Z^" + std::to_string(n) + " has rank " + std::to_string(proj.rank());
    return out;
  }
  if (with_finite) {
    const auto& fin = spec.right();
    std::vector<std::uint32_t> torsion;
    for (const auto& m : lattice::kernel(rows, n)) {
      std::uint32_t f = 0;
      for (std::size_t i = 0; i < m.size(); ++i) f = fin.product(f, finite_power(fin, gens.value(static_cast<GenIndex>(i)).right().index(), m[i]));
      torsion.push_back(f);
    }
    auto in = finite_closure(fin, torsion);
    if (!std::all_of(in.begin(), in.end(), [](bool b) { return b; })) {
      out.status = GenerationCheck::Status::NotGenerating;
      out.note = "generated subgroup meets the finite factor in a proper subgroup";
      return out;
    }
  }
  out.status = GenerationCheck::Status::Verified;
  out.note = "generates " + spec.describe();
  return out;
}

}  // namespace pascal
