#ifndef MIXEDCODES_JOHNSON_HPP
#define MIXEDCODES_JOHNSON_HPP

#include "mixedcodes/exact.hpp"
#include "mixedcodes/profile.hpp"

#include <cstddef>

namespace mixedcodes {

// Normalized critical decoding radius
//   J_q(delta) = (1 - 1/q) (1 - sqrt(1 - delta / (1 - 1/q)))
// for real q > 1 and 0 <= delta < 1 - 1/q. Satisfies delta/2 <= J_q(delta)
// <= delta; radii below J_q(d/n) n keep list sizes polynomially small.
double johnson_radius(double q, double delta);

// Exact-rational test of r < J_q(d/n) * n for integer r, d and rational q:
// with beta = 1 - 1/q the inequality is equivalent to
//   r < beta n   and   (1 - r/(beta n))^2 > 1 - (d/n)/beta.
// Requires d/n < beta (the radius is undefined at or past that point).
bool johnson_condition(const Rat& q, std::size_t r, std::size_t d, std::size_t n);

// Upper bound on codes confined to the radius-r ball: when
// q_a r^2 > (q_a - 1)(2r - d) n holds (q_a the arithmetic mean, checked
// exactly), every code in B_r(0) with minimum distance >= d has size at most
//   (q_a - 1) n d / (q_a r^2 - (q_a - 1)(2r - d) n).
// Throws PreconditionViolated when the denominator condition fails.
Rat constant_weight_bound(const AlphabetProfile& profile, std::size_t r, std::size_t d);

// Relaxed integer list-size bound: for 0 < d < (1 - 1/q_a) n and integer
// rho < J_{q_a}(d/n) n, any code with minimum distance >= d has at most
// ceil((q_a - 1) d n) elements inside any radius-rho ball. The sharper
// radius-dependent value is available through constant_weight_bound.
Int list_size_bound(const AlphabetProfile& profile, std::size_t d, std::size_t rho);

} // namespace mixedcodes

#endif
