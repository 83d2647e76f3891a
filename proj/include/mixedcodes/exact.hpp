#ifndef MIXEDCODES_EXACT_HPP
#define MIXEDCODES_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>

namespace mixedcodes {

// Exact arbitrary-precision integers and rationals used throughout.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// C(n, k) computed exactly; 0 for k > n.
Int binomial(std::size_t n, std::size_t k);

// Natural logarithm of a positive Int, valid far beyond double range.
// Splits x as m * 2^e with m holding the top 53 bits.
double log_int(const Int& x);

// Natural logarithm of a positive Rat.
double log_rat(const Rat& x);

// a / b as a double with full 53-bit precision, valid when either exceeds
// double range (uses mantissa/exponent splitting, not a lossy conversion).
double ratio_as_double(const Int& a, const Int& b);

// Exact rational value as double (numerator/denominator may be huge).
double rat_as_double(const Rat& x);

// x^e for exact rationals, e >= 0.
Rat pow_rat(const Rat& x, unsigned long e);

} // namespace mixedcodes

#endif
