#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace shiftcat {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

inline std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// 2^e as an exact integer.
inline BigInt pow2(unsigned e) { return BigInt(1) << e; }

}  // namespace shiftcat
