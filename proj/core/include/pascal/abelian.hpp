#pragma once

#include "pascal/bigcount.hpp"
#include "pascal/cayley.hpp"
#include "pascal/groups.hpp"
#include "pascal/lattice.hpp"

#include <optional>
#include <span>
#include <vector>

// Translation lengths, the unit ball C of the translation-length norm, and
// compatible generator sets for Z^n and Z^n x F.

namespace pascal {

using RationalVector = std::vector<Rational>;

Rational dot(const RationalVector& a, const RationalVector& b);

/// A generating set of Z^n or Z^n x F (F a finite abelian table), with the
/// appearance point (projection of a^f) / f of every generator, f = |F|.
class AbelianContext {
 public:
  /// Throws StructuralError for any other group shape.
  explicit AbelianContext(const GenSet& gens);

  const GenSet& gens() const { return gens_; }
  std::size_t dimension() const { return dimension_; }
  std::uint32_t torsion_order() const { return torsion_order_; }
  bool has_finite_factor() const { return gens_.spec().kind() == GroupKind::DirectProduct; }

  const RationalVector& appearance_point(GenIndex i) const { return points_.at(i); }
  const std::vector<RationalVector>& appearance_points() const { return points_; }

  /// (projection of g^f) / f for any element.
  RationalVector point_of(const GroupValue& g) const;
  lattice::IntVector projection(const GroupValue& g) const;
  /// Finite component index of g (0 without a finite factor).
  std::uint32_t torsion_part(const GroupValue& g) const;

 private:
  GenSet gens_;
  std::size_t dimension_ = 0;
  std::uint32_t torsion_order_ = 1;
  std::vector<RationalVector> points_;
};

/// Appearance point of every generator, in generating-set order.
std::vector<RationalVector> appearance_points(const AbelianContext& ctx);

enum class PointClass { Vertex, OnFacet, Interior };

const char* to_string(PointClass c);

struct Facet {
  /// psi with psi(x) <= 1 on the body and psi = 1 on the facet.
  RationalVector functional;
  /// Indices of the input points lying on the facet.
  std::vector<std::size_t> members;
};

/// Centrally symmetric full-dimensional polytope with exact facets.
class ConvexBody {
 public:
  std::size_t dimension() const { return dimension_; }
  const std::vector<RationalVector>& points() const { return points_; }
  const std::vector<RationalVector>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  PointClass classify(std::size_t point) const { return classes_.at(point); }

  /// Gauge (Minkowski functional): max over facets of psi(x), never below 0.
  Rational gauge(const RationalVector& x) const;
  bool on_facet(std::size_t facet, const RationalVector& x) const;

 private:
  friend ConvexBody convex_hull(std::span<const RationalVector> points);
  std::size_t dimension_ = 0;
  std::vector<RationalVector> points_;
  std::vector<RationalVector> vertices_;
  std::vector<Facet> facets_;
  std::vector<PointClass> classes_;
};

/// Exhaustive facet search over n-subsets of the points, n <= 4. The point set
/// must be centrally symmetric and span R^n; otherwise StructuralError, or
/// DimensionDeficiency naming a normal vector of the span.
ConvexBody convex_hull(std::span<const RationalVector> points);

/// Convex body of the context's appearance points.
ConvexBody unit_ball(const AbelianContext& ctx);

/// tau(g): the gauge of C at the appearance point of g; 0 for torsion.
Rational translation_length(const AbelianContext& ctx, const ConvexBody& body, const GroupValue& g);

/// l(g^j) / j for j = 1..j_max, read off the ball. InsufficientRadius if
/// some power is outside it.
std::vector<Rational> empirical_translation_length(const Ball& ball, const GroupValue& g, std::size_t j_max);

struct CompatibleSet {
  std::vector<GenIndex> generators;
  std::size_t facet = 0;
};

/// One set per facet (all generators appearing on it), duplicates merged.
std::vector<CompatibleSet> maximal_compatible_sets(const AbelianContext& ctx, const ConvexBody& body);

/// Face criterion: some facet carries every appearance point of S.
bool is_compatible(const AbelianContext& ctx, const ConvexBody& body, std::span<const GenIndex> subset);

struct EmpiricalCompatibility {
  enum class Outcome { Found, NotFound, RadiusTooSmall };
  Outcome outcome = Outcome::NotFound;
  Word witness;
  bool found() const { return outcome == Outcome::Found; }
};

/// Searches the ball for a geodesic with at least `n` of each letter of S.
/// When the radius cannot hold n of each, the search uses the largest count
/// it can hold: no hit gives NotFound, a hit gives RadiusTooSmall.
EmpiricalCompatibility empirical_compatibility(const Ball& ball, std::span<const GenIndex> subset, std::size_t n);

struct MonoidPascal {
  bool in_monoid = false;
  BigCount count = 0;
  std::size_t exponent_vectors = 0;
};

/// Sum of multinomial(m) over exponent vectors m with sum_i m_i * S_i = a and
/// sum_i m_i = length.
MonoidPascal monoid_pascal(const AbelianContext& ctx, std::span<const GenIndex> subset, const GroupValue& a,
                           std::size_t length);

struct FiniteIndexReport {
  std::size_t ball_elements = 0;
  std::size_t covered = 0;  // elements lying in some M(S)
  std::vector<CompatibleSet> sets;
  /// f times the intersection of the lattices spanned by each maximal set.
  lattice::Echelon sublattice;
  std::optional<BigCount> sublattice_index;
  std::size_t sublattice_elements = 0;  // ball elements of the sublattice (finite part trivial)
  std::size_t sublattice_covered = 0;
  bool contains_sublattice() const { return sublattice_index && sublattice_elements == sublattice_covered; }
};

FiniteIndexReport finite_index_union_check(const AbelianContext& ctx, const ConvexBody& body, const Ball& ball);

/// Every facet carries exactly n generator points (so no point sits inside a
/// facet): pi is then injective on each maximal compatible set.
bool is_generic(const AbelianContext& ctx, const ConvexBody& body);

}  // namespace pascal
