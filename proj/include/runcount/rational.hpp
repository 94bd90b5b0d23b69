#ifndef RUNCOUNT_RATIONAL_HPP
#define RUNCOUNT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace runcount {

/* Arbitrary-precision integers and always-reduced rationals.  cpp_rational
   keeps gcd(|num|, den) = 1 and den > 0 as class invariants, which is exactly
   the contract we need for the coefficient field. */
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(int n);

/* True iff q has denominator 1. */
bool isInteger(const Rational& q);

/* Exact integer value of q; throws InexactDivision if q is not an integer. */
BigInt toInteger(const Rational& q);

/* "p/q", with "/q" omitted when the denominator is 1. */
std::string rationalToString(const Rational& q);

/* Parse "p" or "p/q" with optional sign and surrounding whitespace. */
Rational parseRational(const std::string& text);

} // namespace runcount

#endif
