#ifndef MIXEDCODES_ENTROPY_HPP
#define MIXEDCODES_ENTROPY_HPP

namespace mixedcodes {

// q-ary entropy H_q(x) = x log_q(q - 1) - x log_q(x) - (1 - x) log_q(1 - x),
// with the 0 log 0 = 0 convention. Defined for real q > 1 and x in [0, 1];
// increasing on [0, 1 - 1/q] with H_q(1 - 1/q) = 1.
// Throws ArgOutOfRange outside the domain.
double entropy(double q, double x);

} // namespace mixedcodes

#endif
