#include "pascal/formulas.hpp"

#include "pascal/errors.hpp"

namespace pascal {

BigCount factorial(std::uint64_t n) {
  BigCount r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

BigCount binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount r = 1;
  // r stays an integer: after step i it equals C(n - k + i, i).
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigCount multinomial(std::span<const std::uint64_t> parts) {
  BigCount r = 1;
  std::uint64_t total = 0;
  for (auto p : parts) {
    total += p;
    r *= binomial(total, p);
  }
  return r;
}

BigCount direct_product_pascal(std::uint64_t length_a, const BigCount& count_a, std::uint64_t length_b,
                               const BigCount& count_b) {
  return binomial(length_a + length_b, length_a) * count_a * count_b;
}

SyllableDecomposition decompose_syllables(const GroupSpec& spec, const GroupValue& g) {
  if (spec.kind() != GroupKind::FreeProduct) throw StructuralError("syllable decomposition needs a free product");
  validate(spec, g);
  SyllableDecomposition d;
  for (std::size_t i = 0; i < g.syllable_count(); ++i) d.syllables.push_back({g.syllable_side(i), g.syllable(i)});
  return d;
}

FactorGenerators split_direct_product(const GenSet& gens) {
  const GroupSpec& spec = gens.spec();
  if (spec.kind() != GroupKind::DirectProduct) throw StructuralError("split_direct_product needs a direct product");
  std::vector<Generator> left, right;
  for (const auto& g : gens.entries()) {
    const bool l_id = is_identity(g.value.left());
    const bool r_id = is_identity(g.value.right());
    if (r_id)
      left.push_back({g.name, g.value.left()});
    else if (l_id)
      right.push_back({g.name, g.value.right()});
    else
      throw UnsupportedGeneratingSet("generator '" + g.name + "' has nontrivial components in both factors");
  }
  return {GenSet(spec.left(), std::move(left)), GenSet(spec.right(), std::move(right))};
}

FactorGenerators split_free_product(const GenSet& gens) {
  const GroupSpec& spec = gens.spec();
  if (spec.kind() != GroupKind::FreeProduct) throw StructuralError("split_free_product needs a free product");
  std::vector<Generator> left, right;
  for (const auto& g : gens.entries()) {
    if (g.value.syllable_count() != 1)
      throw UnsupportedGeneratingSet("generator '" + g.name + "' is not contained in a single factor");
    auto& side = g.value.syllable_side(0) == Side::Left ? left : right;
    side.push_back({g.name, g.value.syllable(0)});
  }
  return {GenSet(spec.left(), std::move(left)), GenSet(spec.right(), std::move(right))};
}

namespace {

FactorGenerators split(const GenSet& gens) {
  if (gens.spec().kind() == GroupKind::DirectProduct) return split_direct_product(gens);
  if (gens.spec().kind() == GroupKind::FreeProduct) return split_free_product(gens);
  throw StructuralError("product formula needs a direct or free product, got " + gens.spec().describe());
}

ProductPascal::Value lookup(const Ball& ball, const GroupValue& v) {
  auto i = ball.find(v);
  if (!i)
    throw InsufficientRadius("factor element " + to_string(ball.spec(), v) + " lies outside the radius-" +
                             std::to_string(ball.radius()) + " factor ball");
  return {ball.length(*i), ball.count(*i)};
}

}  // namespace

ProductPascal::ProductPascal(const GenSet& gens, std::size_t radius, BallOptions options)
    : spec_(gens.spec()),
      left_(Ball::build(split(gens).left, radius, options)),
      right_(Ball::build(split(gens).right, radius, options)) {}

ProductPascal::Value ProductPascal::evaluate(const GroupValue& g) const {
  validate(spec_, g);
  if (spec_.kind() == GroupKind::DirectProduct) {
    const auto a = lookup(left_, g.left());
    const auto b = lookup(right_, g.right());
    return {a.length + b.length, direct_product_pascal(a.length, a.count, b.length, b.count)};
  }
  Value out{0, 1};
  for (const auto& s : decompose_syllables(spec_, g).syllables) {
    const auto v = lookup(s.side == Side::Left ? left_ : right_, s.value);
    out.length += v.length;
    out.count *= v.count;
  }
  return out;
}

BigCount free_product_pascal(const GenSet& gens, const GroupValue& g, BallOptions options) {
  const auto factors = split_free_product(gens);
  BigCount out = 1;
  for (const auto& s : decompose_syllables(gens.spec(), g).syllables) {
    const GenSet& fg = s.side == Side::Left ? factors.left : factors.right;
    // Grow the factor ball until the syllable shows up.
    for (std::size_t radius = 1;; radius *= 2) {
      const Ball ball = Ball::build(fg, radius, options);
      if (auto i = ball.find(s.value)) {
        out *= ball.count(*i);
        break;
      }
      if (ball.layer_begin(radius) == ball.layer_end(radius))
        throw StructuralError("syllable " + to_string(fg.spec(), s.value) + " is not generated by the factor generators");
    }
  }
  return out;
}

}  // namespace pascal
