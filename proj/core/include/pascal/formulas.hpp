#pragma once

#include "pascal/bigcount.hpp"
#include "pascal/cayley.hpp"
#include "pascal/groups.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace pascal {

/// C(n, k); zero when k > n.
BigCount binomial(std::uint64_t n, std::uint64_t k);
/// (sum parts)! / prod(parts_i!)
BigCount multinomial(std::span<const std::uint64_t> parts);
BigCount factorial(std::uint64_t n);

/// Pascal value of (a, b) in A x B over the split generating set, from the
/// factor lengths and counts: C(l_a + l_b, l_a) * p_a * p_b.
BigCount direct_product_pascal(std::uint64_t length_a, const BigCount& count_a, std::uint64_t length_b,
                               const BigCount& count_b);

struct SyllableDecomposition {
  struct Entry {
    Side side;
    GroupValue value;
  };
  std::vector<Entry> syllables;
};

/// The stored alternating syllable list of a free-product element.
SyllableDecomposition decompose_syllables(const GroupSpec& spec, const GroupValue& g);

/// Generating sets of the two factors of a product whose generators each
/// live in one factor. Throws UnsupportedGeneratingSet for a mixed generator.
struct FactorGenerators {
  GenSet left;
  GenSet right;
};

FactorGenerators split_direct_product(const GenSet& gens);
FactorGenerators split_free_product(const GenSet& gens);

/// Closed-form Pascal values on a product group, backed by Cayley balls of
/// the two factors built over the factor generating sets.
class ProductPascal {
 public:
  /// `gens` must be a split generating set of a DirectProduct or FreeProduct.
  ProductPascal(const GenSet& gens, std::size_t radius, BallOptions options = {});

  struct Value {
    std::uint64_t length;
    BigCount count;
  };

  /// Word length and Pascal value of g. Throws InsufficientRadius when
  /// a factor component lies outside the factor balls.
  Value evaluate(const GroupValue& g) const;

  const Ball& left_ball() const { return left_; }
  const Ball& right_ball() const { return right_; }

 private:
  GroupSpec spec_;
  Ball left_;
  Ball right_;
};

/// p(g) for a free product over the union of factor generating sets.
BigCount free_product_pascal(const GenSet& gens, const GroupValue& g, BallOptions options = {});

}  // namespace pascal
