// Arbitrary-precision integer/rational aliases used throughout.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace alexlin {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_gcd(Int a, Int b) {
  using boost::multiprecision::gcd;
  Int g = gcd(a, b);
  return g < 0 ? Int(-g) : g;
}

inline Int int_abs(const Int& a) { return a < 0 ? Int(-a) : a; }

}  // namespace alexlin
