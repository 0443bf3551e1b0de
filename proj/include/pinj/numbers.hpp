#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace pinj {

// All counts are exact; probabilities and ratios are exact rationals.
// No floating point enters any identity or bound check.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

inline std::string to_string(const Rational& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

}  // namespace pinj
