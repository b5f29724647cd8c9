#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pascal {

enum class GroupKind : std::uint8_t { Finite, FreeAbelian, Free, DirectProduct, FreeProduct };

/// Factor of a direct or free product.
enum class Side : std::uint8_t { Left = 0, Right = 1 };

/// One of the five catalog constructors. Immutable; copies share structure.
class GroupSpec {
 public:
  /// Multiplication table over element indices; index 0 must be the identity.
  /// Throws StructuralError unless the table is a group.
  static GroupSpec finite(std::vector<std::vector<std::uint32_t>> table);
  /// Z_n as a finite table (addition mod n).
  static GroupSpec cyclic(std::uint32_t n);
  static GroupSpec free_abelian(std::size_t rank);
  /// `letters` names the basis (lowercase, distinct); defaults to a, b, c, ...
  static GroupSpec free(std::size_t rank, std::string letters = {});
  static GroupSpec direct_product(GroupSpec left, GroupSpec right);
  static GroupSpec free_product(GroupSpec left, GroupSpec right);

  GroupKind kind() const;

  // FreeAbelian / Free
  std::size_t rank() const;
  const std::string& letters() const;

  // Finite
  std::uint32_t order() const;
  std::uint32_t product(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inverse_index(std::uint32_t a) const;
  bool is_commutative() const;
  const std::vector<std::vector<std::uint32_t>>& table() const;

  // DirectProduct / FreeProduct
  const GroupSpec& left() const;
  const GroupSpec& right() const;
  const GroupSpec& factor(Side side) const { return side == Side::Left ? left() : right(); }

  /// Short human description, e.g. "Z^2", "F(xy)", "(Fin2 * Fin3)".
  std::string describe() const;

  friend bool operator==(const GroupSpec& a, const GroupSpec& b);

 private:
  struct Node;
  explicit GroupSpec(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  const Node& node() const { return *node_; }
  std::shared_ptr<const Node> node_;
};

/// Normal form of an element; its shape is dictated by the GroupSpec it
/// belongs to. Equal normal forms are equal group elements.
class GroupValue {
 public:
  struct Syllable;

  GroupValue() = default;

  static GroupValue element(std::uint32_t index);
  static GroupValue vector(std::vector<std::int64_t> coords);
  /// Reduced word; letter +i / -i is the i-th basis generator (1-based) or its inverse.
  static GroupValue word(std::vector<std::int64_t> letters);
  static GroupValue pair(GroupValue left, GroupValue right);
  /// Alternating non-identity syllables; sides[i] says which factor parts[i] lives in.
  static GroupValue syllables(std::vector<Side> sides, std::vector<GroupValue> parts);

  GroupKind kind() const { return kind_; }

  std::uint32_t index() const { return static_cast<std::uint32_t>(data_.at(0)); }
  std::span<const std::int64_t> coords() const { return data_; }
  std::span<const std::int64_t> letters() const { return data_; }
  const GroupValue& left() const { return parts_.at(0); }
  const GroupValue& right() const { return parts_.at(1); }
  const GroupValue& component(Side side) const { return parts_.at(static_cast<std::size_t>(side)); }

  std::size_t syllable_count() const { return parts_.size(); }
  Side syllable_side(std::size_t i) const { return static_cast<Side>(data_.at(i)); }
  const GroupValue& syllable(std::size_t i) const { return parts_.at(i); }

  friend bool operator==(const GroupValue&, const GroupValue&) = default;

  std::size_t hash() const;

 private:
  GroupKind kind_ = GroupKind::Finite;
  std::vector<std::int64_t> data_{0};
  std::vector<GroupValue> parts_;
};

struct GroupValueHash {
  std::size_t operator()(const GroupValue& v) const { return v.hash(); }
};

GroupValue identity(const GroupSpec& spec);
/// Identity test that needs no spec: every constructor's identity has a unique shape.
bool is_identity(const GroupValue& v);
/// Throws StructuralError if `v` is not a normal form of `spec`.
void validate(const GroupSpec& spec, const GroupValue& v);
bool is_valid(const GroupSpec& spec, const GroupValue& v);

GroupValue multiply(const GroupSpec& spec, const GroupValue& a, const GroupValue& b);
GroupValue inverse(const GroupSpec& spec, const GroupValue& a);
GroupValue power(const GroupSpec& spec, const GroupValue& a, std::int64_t n);

/// Human-readable canonical string: "(1,-2)", "xxY", "[3]", "<(1),[1]>", "L[1]*R[2]", "1".
std::string to_string(const GroupSpec& spec, const GroupValue& v);

/// Appends the canonical binary key of `v`. Keys of values of the same spec
/// are equal iff the values are equal.
void encode_key(const GroupValue& v, std::string& out);
std::string encode_key(const GroupValue& v);
/// Inverse of encode_key; consumes the bytes it reads from `in`.
GroupValue decode_key(const GroupSpec& spec, std::string_view& in);

struct Generator {
  std::string name;
  GroupValue value;
};

/// Index into a GenSet.
using GenIndex = std::uint32_t;

/// Sequence of generator indices; its length is the word length.
using Word = std::vector<GenIndex>;

/// Ordered generating set, closed under inversion, no identity, no repeats.
class GenSet {
 public:
  /// Throws StructuralError when an invariant fails.
  GenSet(GroupSpec spec, std::vector<Generator> gens);

  const GroupSpec& spec() const { return spec_; }
  std::size_t size() const { return gens_.size(); }
  const Generator& operator[](GenIndex i) const { return gens_.at(i); }
  const std::string& name(GenIndex i) const { return gens_.at(i).name; }
  const GroupValue& value(GenIndex i) const { return gens_.at(i).value; }
  GenIndex inverse(GenIndex i) const { return inverse_.at(i); }
  std::optional<GenIndex> find(std::string_view name) const;
  std::optional<GenIndex> find(const GroupValue& value) const;
  const std::vector<Generator>& entries() const { return gens_; }

 private:
  GroupSpec spec_;
  std::vector<Generator> gens_;
  std::vector<GenIndex> inverse_;
};

/// Minimal inversion-closed superset; missing inverses are appended in input
/// order and named `<name>^-1`. Rejects identity and repeated entries.
GenSet close_under_inversion(const GroupSpec& spec, std::vector<Generator> gens);

/// Left-to-right product of generator values; the empty word is the identity.
GroupValue evaluate(const GenSet& gens, const Word& w);

/// Parses whitespace-separated generator names.
Word parse_word(const GenSet& gens, std::string_view text);
std::string format_word(const GenSet& gens, const Word& w);

struct GenerationCheck {
  enum class Status { Verified, NotGenerating, Unchecked };
  Status status = Status::Unchecked;
  std::string note;
};

/// Exact generation test for Z^n and Z^n x F (F abelian). Other specs are
/// Verified when the generators lying in single factors generate each factor,
/// and Unchecked otherwise; results then describe the generated subgroup.
GenerationCheck check_generation(const GenSet& gens);

}  // namespace pascal

template <>
struct std::hash<pascal::GroupValue> {
  std::size_t operator()(const pascal::GroupValue& v) const { return v.hash(); }
};
