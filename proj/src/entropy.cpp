#include "mixedcodes/entropy.hpp"

#include "mixedcodes/errors.hpp"

#include <cmath>

namespace mixedcodes {

double entropy(double q, double x) {
    if (!(q > 1.0)) throw ArgOutOfRange("entropy: base must exceed 1");
    if (!(x >= 0.0 && x <= 1.0)) throw ArgOutOfRange("entropy: argument must lie in [0, 1]");
    const double log_q = std::log(q);
    double h = x * std::log(q - 1.0);
    if (x > 0.0) h -= x * std::log(x);
    if (x < 1.0) h -= (1.0 - x) * std::log(1.0 - x);
    return h / log_q;
}

} // namespace mixedcodes
