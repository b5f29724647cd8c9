#pragma once

#include "pascal/bigcount.hpp"

#include <cstddef>
#include <optional>
#include <vector>

// Integer row reduction for sublattices of Z^n.

namespace pascal::lattice {

using IntVector = std::vector<BigCount>;
using IntMatrix = std::vector<IntVector>;

/// Row-style Hermite form of the lattice spanned by some integer rows:
/// nonzero rows with strictly increasing pivot columns and positive pivots,
/// entries above each pivot reduced into [0, pivot).
struct Echelon {
  std::size_t dimension = 0;
  IntMatrix rows;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return rows.size(); }
};

Echelon echelon(const IntMatrix& generators, std::size_t dimension);

bool contains(const Echelon& lattice, IntVector v);

/// Index of the lattice in Z^n, or nullopt when it is not full rank.
std::optional<BigCount> index(const Echelon& lattice);

/// Basis of {m in Z^k : sum_i m_i * rows[i] = 0}.
IntMatrix kernel(const IntMatrix& rows, std::size_t dimension);

/// Intersection of two full-rank lattices (via the kernel of [A; -B]).
Echelon intersect(const Echelon& a, const Echelon& b);

IntVector scale(IntVector v, const BigCount& k);

}  // namespace pascal::lattice
