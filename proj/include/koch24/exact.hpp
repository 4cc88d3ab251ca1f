#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace koch24 {

// Exact arithmetic used everywhere: arbitrary-precision integers and
// rationals. No floating point appears anywhere in the library.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// "p" when the denominator is 1, otherwise "p/q".
inline std::string rat_str(const Rat& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace koch24
