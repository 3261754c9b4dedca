#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace whg {

// Arbitrary-precision integer and normalized rational (gcd-reduced,
// positive denominator). All core arithmetic in the library is exact.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Int factorial(int n);
Int binomial(int n, int k);

// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Int& v);
std::string to_string(const Rational& q);

}  // namespace whg
