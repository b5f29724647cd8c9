#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace pascal {

/// Exact nonnegative integer used for every geodesic count.
using BigCount = boost::multiprecision::cpp_int;

/// Exact rational with canonical (reduced, positive denominator) form.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigCount& n) { return n.str(); }

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) {
  const auto num = boost::multiprecision::numerator(q);
  const auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace pascal
