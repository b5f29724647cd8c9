#include "pascal/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace pascal::lattice {

namespace {

using boost::multiprecision::abs;

bool is_zero(const IntVector& v, std::size_t from, std::size_t to) {
  for (std::size_t i = from; i < to; ++i)
    if (v[i] != 0) return false;
  return true;
}

void axpy(IntVector& dst, const IntVector& src, const BigCount& q) {
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] -= q * src[i];
}

// Unimodular row reduction pivoting on columns [0, pivot_columns). Rows may be
// wider than pivot_columns; the extra columns ride along. Returns the pivot
// column of each leading row; rows past that count are zero on the pivot block.
std::vector<std::size_t> reduce(IntMatrix& m, std::size_t pivot_columns) {
  std::vector<std::size_t> pivots;
  std::size_t top = 0;
  for (std::size_t col = 0; col < pivot_columns && top < m.size(); ++col) {
    while (true) {
      std::size_t best = m.size();
      for (std::size_t r = top; r < m.size(); ++r) {
        if (m[r][col] == 0) continue;
        if (best == m.size() || abs(m[r][col]) < abs(m[best][col])) best = r;
      }
      if (best == m.size()) break;
      std::swap(m[top], m[best]);
      bool clean = true;
      for (std::size_t r = top + 1; r < m.size(); ++r) {
        if (m[r][col] == 0) continue;
        BigCount q = m[r][col] / m[top][col];
        axpy(m[r], m[top], q);
        if (m[r][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (m[top][col] == 0) continue;
    if (m[top][col] < 0)
      for (auto& x : m[top]) x = -x;
    for (std::size_t r = 0; r < top; ++r) {
      BigCount q = m[r][col] / m[top][col];
      if (m[r][col] - q * m[top][col] < 0) q -= 1;
      axpy(m[r], m[top], q);
    }
    pivots.push_back(col);
    ++top;
  }
  return pivots;
}

}  // namespace

Echelon echelon(const IntMatrix& generators, std::size_t dimension) {
  IntMatrix m = generators;
  for (const auto& row : m)
    if (row.size() != dimension) throw std::invalid_argument("lattice row has wrong dimension");
  Echelon e;
  e.dimension = dimension;
  e.pivots = reduce(m, dimension);
  m.resize(e.pivots.size());
  e.rows = std::move(m);
  return e;
}

bool contains(const Echelon& lattice, IntVector v) {
  if (v.size() != lattice.dimension) return false;
  for (std::size_t i = 0; i < lattice.rows.size(); ++i) {
    const std::size_t c = lattice.pivots[i];
    const BigCount& p = lattice.rows[i][c];
    if (v[c] % p != 0) return false;
    axpy(v, lattice.rows[i], v[c] / p);
  }
  return is_zero(v, 0, v.size());
}

std::optional<BigCount> index(const Echelon& lattice) {
  if (lattice.rank() != lattice.dimension) return std::nullopt;
  BigCount det = 1;
  for (std::size_t i = 0; i < lattice.rows.size(); ++i) det *= lattice.rows[i][lattice.pivots[i]];
  return det;
}

IntMatrix kernel(const IntMatrix& rows, std::size_t dimension) {
  const std::size_t k = rows.size();
  IntMatrix m;
  m.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    IntVector row = rows[i];
    row.resize(dimension + k, 0);
    row[dimension + i] = 1;
    m.push_back(std::move(row));
  }
  const auto pivots = reduce(m, dimension);
  IntMatrix basis;
  for (std::size_t r = pivots.size(); r < k; ++r)
    basis.emplace_back(m[r].begin() + static_cast<std::ptrdiff_t>(dimension), m[r].end());
  return basis;
}

Echelon intersect(const Echelon& a, const Echelon& b) {
  const std::size_t n = a.dimension;
  IntMatrix stacked = a.rows;
  for (const auto& row : b.rows) {
    IntVector neg = row;
    for (auto& x : neg) x = -x;
    stacked.push_back(std::move(neg));
  }
  IntMatrix images;
  for (const auto& coeffs : kernel(stacked, n)) {
    IntVector x(n, 0);
    for (std::size_t i = 0; i < a.rows.size(); ++i)
      for (std::size_t c = 0; c < n; ++c) x[c] += coeffs[i] * a.rows[i][c];
    images.push_back(std::move(x));
  }
  return echelon(images, n);
}

IntVector scale(IntVector v, const BigCount& k) {
  for (auto& x : v) x *= k;
  return v;
}

}  // namespace pascal::lattice
