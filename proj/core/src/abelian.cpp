#include "pascal/abelian.hpp"

#include "pascal/errors.hpp"
#include "pascal/formulas.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace pascal {

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

namespace {

// Reduces m (rows x cols) to reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<RationalVector>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t top = 0;
  for (std::size_t c = 0; c < cols && top < m.size(); ++c) {
    std::size_t p = top;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[top], m[p]);
    const Rational lead = m[top][c];
    for (auto& x : m[top]) x /= lead;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == top || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t j = 0; j < m[r].size(); ++j) m[r][j] -= f * m[top][j];
    }
    pivots.push_back(c);
    ++top;
  }
  return pivots;
}

// Solves rows * psi = (1, ..., 1) for square independent rows.
std::optional<RationalVector> solve_unit(const std::vector<RationalVector>& rows) {
  const std::size_t n = rows.size();
  std::vector<RationalVector> m;
  for (const auto& r : rows) {
    RationalVector aug = r;
    aug.push_back(1);
    m.push_back(std::move(aug));
  }
  if (rref(m, n).size() != n) return std::nullopt;
  RationalVector psi(n);
  for (std::size_t i = 0; i < n; ++i) psi[i] = m[i][n];
  return psi;
}

std::string format_vector(const RationalVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

// ---------------------------------------------------------------- context

AbelianContext::AbelianContext(const GenSet& gens) : gens_(gens) {
  const GroupSpec& spec = gens.spec();
  if (spec.kind() == GroupKind::FreeAbelian) {
    dimension_ = spec.rank();
  } else if (spec.kind() == GroupKind::DirectProduct && spec.left().kind() == GroupKind::FreeAbelian &&
             spec.right().kind() == GroupKind::Finite) {
    if (!spec.right().is_commutative()) throw StructuralError("finite factor " + spec.right().describe() + " is not abelian");
    dimension_ = spec.left().rank();
    torsion_order_ = spec.right().order();
  } else {
    throw StructuralError("abelian tools need Z^n or Z^n x F, got " + spec.describe());
  }
  for (GenIndex i = 0; i < gens.size(); ++i) {
    const GroupValue af = power(spec, gens.value(i), torsion_order_);
    if (has_finite_factor() && !is_identity(af.right()))
      throw StructuralError("generator '" + gens.name(i) + "' to the power f has a nontrivial finite part");
    points_.push_back(point_of(gens.value(i)));
  }
}

lattice::IntVector AbelianContext::projection(const GroupValue& g) const {
  const auto c = has_finite_factor() ? g.left().coords() : g.coords();
  return lattice::IntVector(c.begin(), c.end());
}

std::uint32_t AbelianContext::torsion_part(const GroupValue& g) const {
  return has_finite_factor() ? g.right().index() : 0;
}

RationalVector AbelianContext::point_of(const GroupValue& g) const {
  const GroupValue gf = power(gens_.spec(), g, torsion_order_);
  const auto proj = projection(gf);
  RationalVector v;
  for (const auto& x : proj) v.emplace_back(Rational(x) / torsion_order_);
  return v;
}

std::vector<RationalVector> appearance_points(const AbelianContext& ctx) { return ctx.appearance_points(); }

const char* to_string(PointClass c) {
  switch (c) {
    case PointClass::Vertex: return "vertex";
    case PointClass::OnFacet: return "on-facet";
    case PointClass::Interior: return "interior";
  }
  return "?";
}

// ------------------------------------------------------------------- hull

Rational ConvexBody::gauge(const RationalVector& x) const {
  Rational best = 0;
  for (const auto& f : facets_) best = std::max(best, dot(f.functional, x));
  return best;
}

bool ConvexBody::on_facet(std::size_t facet, const RationalVector& x) const {
  return dot(facets_.at(facet).functional, x) == 1;
}

ConvexBody convex_hull(std::span<const RationalVector> points) {
  if (points.empty()) throw DimensionDeficiency("convex hull of an empty point set");
  const std::size_t n = points[0].size();
  if (n == 0) throw DimensionDeficiency("convex hull in dimension 0");
  if (n > 4) throw StructuralError("convex hull supports dimension at most 4, got " + std::to_string(n));
  for (const auto& p : points)
    if (p.size() != n) throw StructuralError("convex hull points have mixed dimensions");

  {
    std::vector<RationalVector> m(points.begin(), points.end());
    const auto piv = rref(m, n);
    if (piv.size() < n) {
      // A vector orthogonal to every point: free column set to 1.
      std::size_t free = 0;
      while (std::find(piv.begin(), piv.end(), free) != piv.end()) ++free;
      RationalVector normal(n, 0);
      normal[free] = 1;
      for (std::size_t r = 0; r < piv.size(); ++r) normal[piv[r]] = -m[r][free];
      throw DimensionDeficiency("points span a subspace of rank " + std::to_string(piv.size()) + " < " +
                                std::to_string(n) + "; all are orthogonal to " + format_vector(normal));
    }
  }

  std::vector<RationalVector> unique;
  for (const auto& p : points)
    if (std::find(unique.begin(), unique.end(), p) == unique.end()) unique.push_back(p);
  for (const auto& p : unique) {
    RationalVector neg = p;
    for (auto& x : neg) x = -x;
    if (std::find(unique.begin(), unique.end(), neg) == unique.end())
      throw StructuralError("convex hull input is not centrally symmetric: missing " + format_vector(neg));
  }

  ConvexBody body;
  body.dimension_ = n;
  body.points_.assign(points.begin(), points.end());
  std::set<RationalVector> seen;
  for_each_subset(unique.size(), n, [&](const std::vector<std::size_t>& sub) {
    std::vector<RationalVector> rows;
    for (auto i : sub) rows.push_back(unique[i]);
    auto psi = solve_unit(rows);
    if (!psi || seen.count(*psi)) return;
    for (const auto& u : unique)
      if (dot(*psi, u) > 1) return;
    seen.insert(*psi);
    Facet f{*psi, {}};
    for (std::size_t i = 0; i < points.size(); ++i)
      if (dot(*psi, points[i]) == 1) f.members.push_back(i);
    body.facets_.push_back(std::move(f));
  });
  std::sort(body.facets_.begin(), body.facets_.end(),
            [](const Facet& a, const Facet& b) { return a.functional > b.functional; });

  for (const auto& u : unique) {
    std::vector<RationalVector> normals;
    for (const auto& f : body.facets_)
      if (dot(f.functional, u) == 1) normals.push_back(f.functional);
    if (!normals.empty() && rref(normals, n).size() == n) body.vertices_.push_back(u);
  }
  std::sort(body.vertices_.begin(), body.vertices_.end(), std::greater<>());

  for (const auto& p : points) {
    if (std::find(body.vertices_.begin(), body.vertices_.end(), p) != body.vertices_.end())
      body.classes_.push_back(PointClass::Vertex);
    else if (body.gauge(p) == 1)
      body.classes_.push_back(PointClass::OnFacet);
    else
      body.classes_.push_back(PointClass::Interior);
  }
  return body;
}

ConvexBody unit_ball(const AbelianContext& ctx) { return convex_hull(ctx.appearance_points()); }

Rational translation_length(const AbelianContext& ctx, const ConvexBody& body, const GroupValue& g) {
  return body.gauge(ctx.point_of(g));
}

std::vector<Rational> empirical_translation_length(const Ball& ball, const GroupValue& g, std::size_t j_max) {
  std::vector<Rational> out;
  GroupValue gj = identity(ball.spec());
  for (std::size_t j = 1; j <= j_max; ++j) {
    gj = multiply(ball.spec(), gj, g);
    auto len = ball.length_of(gj);
    if (!len)
      throw InsufficientRadius("power " + std::to_string(j) + " of " + to_string(ball.spec(), g) +
                               " lies outside the radius-" + std::to_string(ball.radius()) + " ball");
    out.emplace_back(Rational(*len) / j);
  }
  return out;
}

// ----------------------------------------------------------- compatibility

std::vector<CompatibleSet> maximal_compatible_sets(const AbelianContext& ctx, const ConvexBody& body) {
  std::vector<CompatibleSet> out;
  for (std::size_t f = 0; f < body.facets().size(); ++f) {
    CompatibleSet s{{}, f};
    for (GenIndex i = 0; i < ctx.gens().size(); ++i)
      if (body.on_facet(f, ctx.appearance_point(i))) s.generators.push_back(i);
    const bool dup = std::any_of(out.begin(), out.end(), [&](const CompatibleSet& o) { return o.generators == s.generators; });
    if (!dup) out.push_back(std::move(s));
  }
  return out;
}

bool is_compatible(const AbelianContext& ctx, const ConvexBody& body, std::span<const GenIndex> subset) {
  if (subset.empty()) return true;
  for (std::size_t f = 0; f < body.facets().size(); ++f) {
    const bool all = std::all_of(subset.begin(), subset.end(),
                                 [&](GenIndex i) { return body.on_facet(f, ctx.appearance_point(i)); });
    if (all) return true;
  }
  return false;
}

EmpiricalCompatibility empirical_compatibility(const Ball& ball, std::span<const GenIndex> subset, std::size_t n) {
  std::vector<GenIndex> letters(subset.begin(), subset.end());
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  EmpiricalCompatibility out;
  if (letters.empty() || n == 0) {
    out.outcome = EmpiricalCompatibility::Outcome::Found;
    return out;
  }
  // A geodesic with n of each letter also has fewer, so searching with the
  // largest count the radius can hold still decides NotFound.
  const std::size_t wanted = n;
  n = std::min(n, ball.radius() / letters.size());
  if (n == 0) {
    out.outcome = EmpiricalCompatibility::Outcome::RadiusTooSmall;
    return out;
  }
  // Per-letter counts capped at n, packed base (n + 1).
  std::vector<int> slot(ball.gens().size(), -1);
  for (std::size_t i = 0; i < letters.size(); ++i) slot[letters[i]] = static_cast<int>(i);
  std::uint64_t full = 0, place = 1;
  std::vector<std::uint64_t> places;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    places.push_back(place);
    full += n * place;
    place *= n + 1;
  }
  auto bump = [&](std::uint64_t code, GenIndex a) {
    const int s = slot[a];
    if (s < 0) return code;
    const auto p = places[static_cast<std::size_t>(s)];
    return (code / p) % (n + 1) < n ? code + p : code;
  };
  struct Back {
    Ball::Index parent;
    std::uint64_t parent_code;
    GenIndex letter;
  };
  std::vector<std::map<std::uint64_t, Back>> states(ball.size());
  states[0].emplace(0, Back{0, 0, 0});
  for (Ball::Index g = 1; g < ball.size(); ++g) {
    for (const auto& p : ball.predecessors(g)) {
      for (const auto& [code, _] : states[p.parent]) {
        const auto next = bump(code, p.generator);
        states[g].emplace(next, Back{p.parent, code, p.generator});
        if (next != full) continue;
        Word w;
        Ball::Index at = g;
        std::uint64_t c = next;
        while (at != 0) {
          const Back& b = states[at].at(c);
          w.push_back(b.letter);
          at = b.parent;
          c = b.parent_code;
        }
        std::reverse(w.begin(), w.end());
        out.outcome = n == wanted ? EmpiricalCompatibility::Outcome::Found
                                  : EmpiricalCompatibility::Outcome::RadiusTooSmall;
        out.witness = std::move(w);
        return out;
      }
    }
  }
  return out;
}

// ----------------------------------------------------------- monoid Pascal

MonoidPascal monoid_pascal(const AbelianContext& ctx, std::span<const GenIndex> subset, const GroupValue& a,
                           std::size_t length) {
  MonoidPascal out;
  const std::size_t k = subset.size();
  const GroupSpec& spec = ctx.gens().spec();
  const auto target = ctx.projection(a);
  const auto target_f = ctx.torsion_part(a);
  if (k == 0) {
    out.in_monoid = is_identity(a) && length == 0;
    out.count = out.in_monoid ? 1 : 0;
    out.exponent_vectors = out.in_monoid ? 1 : 0;
    return out;
  }
  const std::size_t n = ctx.dimension();
  std::vector<std::vector<std::int64_t>> proj;
  std::vector<std::uint32_t> tors;
  for (auto i : subset) {
    const auto p = ctx.projection(ctx.gens().value(i));
    std::vector<std::int64_t> v;
    for (const auto& x : p) v.push_back(static_cast<std::int64_t>(x));
    proj.push_back(std::move(v));
    tors.push_back(ctx.torsion_part(ctx.gens().value(i)));
  }
  const GroupSpec* fin = ctx.has_finite_factor() ? &spec.right() : nullptr;
  std::vector<std::int64_t> sum(n, 0);
  std::vector<std::uint64_t> m(k, 0);
  // Enumerate compositions of `length` into k parts; the last part is forced.
  std::function<void(std::size_t, std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::size_t left, std::uint32_t f) {
    for (std::size_t e = (i + 1 == k ? left : 0); e <= left; ++e) {
      m[i] = e;
      std::uint32_t f2 = f;
      for (std::size_t c = 0; c < n; ++c) sum[c] += static_cast<std::int64_t>(e) * proj[i][c];
      if (fin)
        for (std::size_t t = 0; t < e % fin->order(); ++t) f2 = fin->product(f2, tors[i]);
      if (i + 1 == k) {
        bool hit = f2 == target_f;
        for (std::size_t c = 0; c < n && hit; ++c) hit = sum[c] == target[c];
        if (hit) {
          ++out.exponent_vectors;
          out.count += multinomial(m);
        }
      } else {
        rec(i + 1, left - e, f2);
      }
      for (std::size_t c = 0; c < n; ++c) sum[c] -= static_cast<std::int64_t>(e) * proj[i][c];
    }
  };
  rec(0, length, 0);
  out.in_monoid = out.exponent_vectors > 0;
  return out;
}

// ------------------------------------------------------------ finite index

FiniteIndexReport finite_index_union_check(const AbelianContext& ctx, const ConvexBody& body, const Ball& ball) {
  FiniteIndexReport r;
  r.sets = maximal_compatible_sets(ctx, body);
  const std::size_t n = ctx.dimension();
  std::optional<lattice::Echelon> meet;
  for (const auto& s : r.sets) {
    lattice::IntMatrix rows;
    for (auto i : s.generators) rows.push_back(ctx.projection(ctx.gens().value(i)));
    auto e = lattice::echelon(rows, n);
    meet = meet ? lattice::intersect(*meet, e) : e;
  }
  if (!meet) meet = lattice::echelon({}, n);
  lattice::IntMatrix scaled;
  for (const auto& row : meet->rows) scaled.push_back(lattice::scale(row, ctx.torsion_order()));
  r.sublattice = lattice::echelon(scaled, n);
  r.sublattice_index = lattice::index(r.sublattice);
  r.ball_elements = ball.size();
  for (Ball::Index g = 0; g < ball.size(); ++g) {
    const GroupValue v = ball.value(g);
    const bool covered = std::any_of(r.sets.begin(), r.sets.end(), [&](const CompatibleSet& s) {
      return monoid_pascal(ctx, s.generators, v, ball.length(g)).in_monoid;
    });
    if (covered) ++r.covered;
    if (ctx.torsion_part(v) == 0 && lattice::contains(r.sublattice, ctx.projection(v))) {
      ++r.sublattice_elements;
      if (covered) ++r.sublattice_covered;
    }
  }
  return r;
}

bool is_generic(const AbelianContext& ctx, const ConvexBody& body) {
  for (std::size_t f = 0; f < body.facets().size(); ++f) {
    std::size_t on = 0;
    for (GenIndex i = 0; i < ctx.gens().size(); ++i)
      if (body.on_facet(f, ctx.appearance_point(i))) ++on;
    if (on != ctx.dimension()) return false;
  }
  return true;
}

}  // namespace pascal
