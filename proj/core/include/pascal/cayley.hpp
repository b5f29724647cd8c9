#pragma once

#include "pascal/bigcount.hpp"
#include "pascal/groups.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

namespace pascal {

struct BallOptions {
  /// Building fails with ResourceError once the ball would exceed this size.
  std::size_t max_elements = 5'000'000;
};

/// A geodesic edge h --generator--> g with l(h) = l(g) - 1.
struct Predecessor {
  GenIndex generator;
  std::uint32_t parent;
};

/// The radius-R ball of a Cayley graph with word length and the Pascal
/// count p(g) of every member.
///
/// Elements are numbered in discovery order: by layer, then by (parent
/// index, generator index) of the first edge that reached them. The identity
/// is element 0. Counts satisfy p(g) = sum of p(h) over geodesic
/// predecessors h. Balls are immutable; copies share storage.
class Ball {
 public:
  using Index = std::uint32_t;

  static Ball build(const GenSet& gens, std::size_t radius, BallOptions options = {});

  const GenSet& gens() const;
  const GroupSpec& spec() const { return gens().spec(); }
  std::size_t radius() const;
  std::size_t size() const;

  std::optional<Index> find(const GroupValue& v) const;
  std::optional<Index> find_key(std::string_view key) const;
  GroupValue value(Index i) const;
  std::string_view key(Index i) const;
  std::size_t length(Index i) const;
  const BigCount& count(Index i) const;
  std::span<const Predecessor> predecessors(Index i) const;

  /// Elements of length r occupy [layer_begin(r), layer_end(r)).
  Index layer_begin(std::size_t r) const;
  Index layer_end(std::size_t r) const;

  std::optional<std::size_t> length_of(const GroupValue& v) const;

 private:
  struct Impl;
  explicit Ball(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Forward geodesic edges of a ball: next(g, a) is g*a when l(g*a) = l(g)+1.
class ForwardEdges {
 public:
  explicit ForwardEdges(const Ball& ball);
  std::optional<Ball::Index> next(Ball::Index g, GenIndex a) const {
    const auto v = table_[static_cast<std::size_t>(g) * letters_ + a];
    if (v < 0) return std::nullopt;
    return static_cast<Ball::Index>(v);
  }
  std::size_t letters() const { return letters_; }

 private:
  std::size_t letters_;
  std::vector<std::int32_t> table_;
};

enum class PredecessorChoice { First, Last };

/// One geodesic word for ball element `i`, following the first (or last)
/// predecessor at every step.
Word some_geodesic(const Ball& ball, Ball::Index i, PredecessorChoice choice = PredecessorChoice::First);

struct GeodesicList {
  std::vector<Word> words;  // lexicographic by generator index
  bool truncated = false;
};

/// All geodesic words for g, at most `cap` of them; `truncated` reports a hit cap.
GeodesicList enumerate_geodesics(const Ball& ball, const GroupValue& g, std::size_t cap);

/// Throws InsufficientRadius when the ball is shorter than the word.
bool is_geodesic(const Ball& ball, const Word& w);

// Structured subgroup predicates.

struct WholeGroup {};

/// Sublattice of Z^n spanned by integer rows (FreeAbelian groups only).
struct Sublattice {
  std::vector<std::vector<std::int64_t>> basis;
};

/// Left or right factor of a DirectProduct.
struct FactorSubgroup {
  Side side = Side::Left;
};

/// Kernel of the homomorphism onto a finite group sending generator i to
/// element images[i].
struct FiniteKernel {
  GroupSpec quotient;
  std::vector<std::uint32_t> images;
};

using SubgroupPredicate = std::variant<WholeGroup, Sublattice, FactorSubgroup, FiniteKernel>;

/// Membership flag per ball element. Throws StructuralError if the predicate
/// does not fit the group or the kernel images are not a homomorphism on the ball.
std::vector<bool> membership(const Ball& ball, const SubgroupPredicate& subgroup);

/// Whether a generator value lies in the subgroup.
bool generator_in_subgroup(const GenSet& gens, GenIndex i, const SubgroupPredicate& subgroup);

struct TotallyGeodesicResult {
  bool holds = true;
  Word word;                     // offending geodesic when !holds
  std::size_t prefix_length = 0; // its prefix of this length leaves the subgroup
};

TotallyGeodesicResult is_totally_geodesic(const Ball& ball, const SubgroupPredicate& subgroup);

struct RestrictionResult {
  bool agrees = true;
  std::size_t compared = 0;
  std::optional<Ball::Index> mismatch;
  BigCount expected;  // p over the full generating set
  BigCount got;       // p over the generators lying in the subgroup
};

/// Compares p over the generators inside the subgroup with p over all
/// generators, on every ball element in the subgroup.
RestrictionResult restricted_pascal_agrees(const Ball& ball, const SubgroupPredicate& subgroup,
                                           BallOptions options = {});

struct IdenticallyOneResult {
  bool holds = true;
  std::optional<Ball::Index> counterexample;
};

IdenticallyOneResult pascal_identically_one(const Ball& ball);

/// First element in ball order with p(g) > bound.
std::optional<Ball::Index> pascal_bound_witness(const Ball& ball, const BigCount& bound);

}  // namespace pascal
