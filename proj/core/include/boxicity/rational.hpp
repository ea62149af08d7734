#ifndef BOXICITY_RATIONAL_HPP
#define BOXICITY_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace boxicity {

/// Arbitrary-precision integer and rational used wherever probabilities and
/// expectations must be compared exactly.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" in lowest terms; integers print without a denominator.
inline std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

/// Smallest integer >= r.
inline BigInt ceil(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  BigInt q = num / den;  // truncates toward zero
  if (q * den < num) {
    ++q;
  }
  return q;
}

}  // namespace boxicity

#endif  // BOXICITY_RATIONAL_HPP
