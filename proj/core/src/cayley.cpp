#include "pascal/cayley.hpp"

#include "pascal/errors.hpp"
#include "pascal/lattice.hpp"

#include <absl/container/flat_hash_set.h>

#include <algorithm>
#include <functional>

namespace pascal {

struct Ball::Impl {
  explicit Impl(const GenSet& g) : gens(g), index(0, KeyHash{this}, KeyEq{this}) {}

  std::string_view key(Index i) const {
    return std::string_view(arena).substr(offsets[i], offsets[i + 1] - offsets[i]);
  }

  // Hash set of element indices, looked up by index or by raw key bytes.
  struct KeyHash {
    using is_transparent = void;
    const Impl* self;
    std::size_t operator()(std::string_view k) const { return std::hash<std::string_view>{}(k); }
    std::size_t operator()(Index i) const { return (*this)(self->key(i)); }
  };
  struct KeyEq {
    using is_transparent = void;
    const Impl* self;
    std::string_view view(std::string_view k) const { return k; }
    std::string_view view(Index i) const { return self->key(i); }
    template <class A, class B>
    bool operator()(const A& a, const B& b) const {
      return view(a) == view(b);
    }
  };

  GenSet gens;
  std::size_t radius = 0;
  std::string arena;
  std::vector<std::uint64_t> offsets{0};
  std::vector<BigCount> counts;
  std::vector<Index> layer_starts;  // layer r is [layer_starts[r], layer_starts[r+1])
  std::vector<std::uint64_t> pred_offsets{0, 0};  // element i owns [pred_offsets[i], pred_offsets[i+1])
  std::vector<Predecessor> preds;
  absl::flat_hash_set<Index, KeyHash, KeyEq> index;

  Index add(std::string_view k) {
    const auto i = static_cast<Index>(counts.size());
    arena.append(k);
    offsets.push_back(arena.size());
    counts.emplace_back(0);
    index.insert(i);
    return i;
  }
};

Ball Ball::build(const GenSet& gens, std::size_t radius, BallOptions options) {
  auto impl = std::make_shared<Impl>(gens);
  Impl& b = *impl;
  b.radius = radius;
  const GroupSpec& spec = gens.spec();
  const std::size_t k = gens.size();

  b.add(encode_key(identity(spec)));
  b.counts[0] = 1;
  b.layer_starts = {0, 1};

  struct Edge {
    Index child;
    Predecessor pred;
  };
  std::vector<Edge> edges;
  std::string scratch;

  for (std::size_t r = 0; r < radius; ++r) {
    const Index begin = b.layer_starts[r];
    const Index end = b.layer_starts[r + 1];
    const Index next_begin = end;
    edges.clear();
    for (Index g = begin; g < end; ++g) {
      std::string_view kv = b.key(g);
      const GroupValue gv = decode_key(spec, kv);
      for (GenIndex a = 0; a < k; ++a) {
        scratch.clear();
        encode_key(multiply(spec, gv, gens.value(a)), scratch);
        Index child;
        if (auto it = b.index.find(std::string_view(scratch)); it != b.index.end()) {
          child = *it;
          if (child < next_begin) continue;  // shorter or same layer: not a geodesic edge
        } else {
          if (b.counts.size() >= options.max_elements)
            throw ResourceError("ball size cap of " + std::to_string(options.max_elements) +
                                " elements exceeded while building layer " + std::to_string(r + 1));
          child = b.add(scratch);
        }
        b.counts[child] += b.counts[g];
        edges.push_back({child, {a, g}});
      }
    }
    const auto next_end = static_cast<Index>(b.counts.size());
    // Bucket the layer's edges by child, keeping discovery order inside a bucket.
    std::vector<std::uint64_t> bucket(next_end - next_begin + 1, 0);
    for (const auto& e : edges) ++bucket[e.child - next_begin + 1];
    for (std::size_t i = 1; i < bucket.size(); ++i) bucket[i] += bucket[i - 1];
    const std::uint64_t base = b.preds.size();
    b.preds.resize(base + edges.size());
    std::vector<std::uint64_t> fill(bucket.begin(), bucket.end() - 1);
    for (const auto& e : edges) b.preds[base + fill[e.child - next_begin]++] = e.pred;
    for (std::size_t i = 1; i < bucket.size(); ++i) b.pred_offsets.push_back(base + bucket[i]);
    b.layer_starts.push_back(next_end);
    if (next_end == next_begin) {
      // Finite group exhausted: remaining layers are empty.
      for (std::size_t rest = r + 1; rest < radius; ++rest) b.layer_starts.push_back(next_end);
      break;
    }
  }
  return Ball(std::move(impl));
}

const GenSet& Ball::gens() const { return impl_->gens; }
std::size_t Ball::radius() const { return impl_->radius; }
std::size_t Ball::size() const { return impl_->counts.size(); }

std::optional<Ball::Index> Ball::find_key(std::string_view key) const {
  auto it = impl_->index.find(key);
  if (it == impl_->index.end()) return std::nullopt;
  return *it;
}

std::optional<Ball::Index> Ball::find(const GroupValue& v) const { return find_key(encode_key(v)); }

GroupValue Ball::value(Index i) const {
  std::string_view k = impl_->key(i);
  return decode_key(spec(), k);
}

std::string_view Ball::key(Index i) const { return impl_->key(i); }

std::size_t Ball::length(Index i) const {
  const auto& ls = impl_->layer_starts;
  return static_cast<std::size_t>(std::upper_bound(ls.begin(), ls.end(), i) - ls.begin()) - 1;
}

const BigCount& Ball::count(Index i) const { return impl_->counts.at(i); }

std::span<const Predecessor> Ball::predecessors(Index i) const {
  const auto lo = impl_->pred_offsets.at(i);
  const auto hi = impl_->pred_offsets.at(i + 1);
  return std::span<const Predecessor>(impl_->preds).subspan(lo, hi - lo);
}

Ball::Index Ball::layer_begin(std::size_t r) const {
  if (r > radius()) throw InsufficientRadius("layer " + std::to_string(r) + " beyond ball radius " + std::to_string(radius()));
  return impl_->layer_starts[r];
}

Ball::Index Ball::layer_end(std::size_t r) const {
  if (r > radius()) throw InsufficientRadius("layer " + std::to_string(r) + " beyond ball radius " + std::to_string(radius()));
  return impl_->layer_starts[r + 1];
}

std::optional<std::size_t> Ball::length_of(const GroupValue& v) const {
  if (auto i = find(v)) return length(*i);
  return std::nullopt;
}

// ------------------------------------------------------------ ForwardEdges

ForwardEdges::ForwardEdges(const Ball& ball) : letters_(ball.gens().size()) {
  table_.assign(ball.size() * letters_, -1);
  for (Ball::Index c = 1; c < ball.size(); ++c)
    for (const auto& p : ball.predecessors(c))
      table_[static_cast<std::size_t>(p.parent) * letters_ + p.generator] = static_cast<std::int32_t>(c);
}

// -------------------------------------------------------------- geodesics

Word some_geodesic(const Ball& ball, Ball::Index i, PredecessorChoice choice) {
  Word w;
  while (i != 0) {
    const auto preds = ball.predecessors(i);
    const auto& p = choice == PredecessorChoice::First ? preds.front() : preds.back();
    w.push_back(p.generator);
    i = p.parent;
  }
  std::reverse(w.begin(), w.end());
  return w;
}

GeodesicList enumerate_geodesics(const Ball& ball, const GroupValue& g, std::size_t cap) {
  auto idx = ball.find(g);
  if (!idx) throw InsufficientRadius("element " + to_string(ball.spec(), g) + " is outside the radius-" +
                                     std::to_string(ball.radius()) + " ball");
  GeodesicList out;
  out.truncated = ball.count(*idx) > cap;
  Word suffix;
  std::function<void(Ball::Index)> walk = [&](Ball::Index h) {
    if (out.words.size() >= cap) return;
    if (h == 0) {
      out.words.emplace_back(suffix.rbegin(), suffix.rend());
      return;
    }
    for (const auto& p : ball.predecessors(h)) {
      suffix.push_back(p.generator);
      walk(p.parent);
      suffix.pop_back();
    }
  };
  walk(*idx);
  std::sort(out.words.begin(), out.words.end());
  return out;
}

bool is_geodesic(const Ball& ball, const Word& w) {
  if (w.size() > ball.radius())
    throw InsufficientRadius("word of length " + std::to_string(w.size()) + " needs a ball of radius at least " +
                             std::to_string(w.size()) + " (have " + std::to_string(ball.radius()) + ")");
  auto len = ball.length_of(evaluate(ball.gens(), w));
  return len && *len == w.size();
}

// --------------------------------------------------------------- subgroups

namespace {

lattice::Echelon sublattice_echelon(const GroupSpec& spec, const Sublattice& s) {
  if (spec.kind() != GroupKind::FreeAbelian) throw StructuralError("sublattice predicate needs a free abelian group");
  lattice::IntMatrix rows;
  for (const auto& r : s.basis) {
    if (r.size() != spec.rank()) throw StructuralError("sublattice basis vector has wrong dimension");
    rows.emplace_back(r.begin(), r.end());
  }
  return lattice::echelon(rows, spec.rank());
}

bool value_in(const GroupSpec& spec, const GroupValue& v, const SubgroupPredicate& subgroup,
              const lattice::Echelon* lat) {
  if (std::holds_alternative<WholeGroup>(subgroup)) return true;
  if (std::holds_alternative<Sublattice>(subgroup))
    return lattice::contains(*lat, lattice::IntVector(v.coords().begin(), v.coords().end()));
  if (const auto* f = std::get_if<FactorSubgroup>(&subgroup)) {
    if (spec.kind() != GroupKind::DirectProduct) throw StructuralError("factor predicate needs a direct product");
    return is_identity(v.component(f->side == Side::Left ? Side::Right : Side::Left));
  }
  throw StructuralError("kernel membership needs a word for the element");
}

}  // namespace

bool generator_in_subgroup(const GenSet& gens, GenIndex i, const SubgroupPredicate& subgroup) {
  if (const auto* k = std::get_if<FiniteKernel>(&subgroup)) {
    if (k->images.size() != gens.size()) throw StructuralError("kernel predicate needs one image per generator");
    return k->images.at(i) == 0;
  }
  std::optional<lattice::Echelon> lat;
  if (const auto* s = std::get_if<Sublattice>(&subgroup)) lat = sublattice_echelon(gens.spec(), *s);
  return value_in(gens.spec(), gens.value(i), subgroup, lat ? &*lat : nullptr);
}

std::vector<bool> membership(const Ball& ball, const SubgroupPredicate& subgroup) {
  std::vector<bool> in(ball.size(), true);
  if (std::holds_alternative<WholeGroup>(subgroup)) return in;
  if (const auto* k = std::get_if<FiniteKernel>(&subgroup)) {
    if (k->quotient.kind() != GroupKind::Finite) throw StructuralError("kernel predicate needs a finite quotient");
    if (k->images.size() != ball.gens().size()) throw StructuralError("kernel predicate needs one image per generator");
    for (auto img : k->images)
      if (img >= k->quotient.order()) throw StructuralError("kernel image out of range");
    std::vector<std::uint32_t> phi(ball.size(), 0);
    for (Ball::Index g = 1; g < ball.size(); ++g) {
      const auto preds = ball.predecessors(g);
      phi[g] = k->quotient.product(phi[preds[0].parent], k->images[preds[0].generator]);
      for (const auto& p : preds.subspan(1))
        if (k->quotient.product(phi[p.parent], k->images[p.generator]) != phi[g])
          throw StructuralError("generator images do not define a homomorphism (conflict at " +
                                to_string(ball.spec(), ball.value(g)) + ")");
      in[g] = phi[g] == 0;
    }
    return in;
  }
  std::optional<lattice::Echelon> lat;
  if (const auto* s = std::get_if<Sublattice>(&subgroup)) lat = sublattice_echelon(ball.spec(), *s);
  for (Ball::Index g = 0; g < ball.size(); ++g) in[g] = value_in(ball.spec(), ball.value(g), subgroup, lat ? &*lat : nullptr);
  return in;
}

TotallyGeodesicResult is_totally_geodesic(const Ball& ball, const SubgroupPredicate& subgroup) {
  const auto in = membership(ball, subgroup);
  // clean[g]: g is in the subgroup and so is every prefix of every geodesic for g.
  std::vector<bool> clean(ball.size(), false);
  clean[0] = in[0];
  TotallyGeodesicResult out;
  std::optional<Ball::Index> bad;
  for (Ball::Index g = 1; g < ball.size(); ++g) {
    bool ok = in[g];
    for (const auto& p : ball.predecessors(g)) ok = ok && clean[p.parent];
    clean[g] = ok;
    if (in[g] && !ok && !bad) bad = g;
  }
  if (!bad) return out;
  out.holds = false;
  Word suffix;
  Ball::Index g = *bad;
  while (true) {
    const auto preds = ball.predecessors(g);
    const auto it = std::find_if(preds.begin(), preds.end(), [&](const Predecessor& p) { return !clean[p.parent]; });
    suffix.push_back(it->generator);
    if (!in[it->parent]) {
      out.word = some_geodesic(ball, it->parent);
      out.prefix_length = out.word.size();
      out.word.insert(out.word.end(), suffix.rbegin(), suffix.rend());
      return out;
    }
    g = it->parent;
  }
}

RestrictionResult restricted_pascal_agrees(const Ball& ball, const SubgroupPredicate& subgroup, BallOptions options) {
  const auto in = membership(ball, subgroup);
  std::vector<Generator> sub;
  for (GenIndex i = 0; i < ball.gens().size(); ++i)
    if (generator_in_subgroup(ball.gens(), i, subgroup)) sub.push_back(ball.gens()[i]);
  const GenSet sub_gens(ball.spec(), std::move(sub));
  const Ball sub_ball = Ball::build(sub_gens, ball.radius(), options);
  RestrictionResult out;
  for (Ball::Index g = 0; g < ball.size(); ++g) {
    if (!in[g]) continue;
    ++out.compared;
    auto h = sub_ball.find_key(ball.key(g));
    const BigCount got = h ? sub_ball.count(*h) : BigCount(0);
    if (got != ball.count(g)) {
      out.agrees = false;
      out.mismatch = g;
      out.expected = ball.count(g);
      out.got = got;
      return out;
    }
  }
  return out;
}

IdenticallyOneResult pascal_identically_one(const Ball& ball) {
  for (Ball::Index g = 0; g < ball.size(); ++g)
    if (ball.count(g) != 1) return {false, g};
  return {};
}

std::optional<Ball::Index> pascal_bound_witness(const Ball& ball, const BigCount& bound) {
  for (Ball::Index g = 0; g < ball.size(); ++g)
    if (ball.count(g) > bound) return g;
  return std::nullopt;
}

}  // namespace pascal
