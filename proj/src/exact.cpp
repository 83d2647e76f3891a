#include "mixedcodes/exact.hpp"

#include <stdexcept>

namespace mixedcodes {

Int binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int result = 1;
    // Multiply/divide in lockstep; each intermediate division is exact.
    for (std::size_t i = 1; i <= k; ++i) {
        result *= static_cast<unsigned long>(n - k + i);
        result /= static_cast<unsigned long>(i);
    }
    return result;
}

namespace {

// Top 53 bits of |x| as a double mantissa plus binary exponent: |x| = m * 2^e.
void split_mantissa(const Int& x, double& m, long& e) {
    const std::size_t bits = boost::multiprecision::msb(x) + 1;
    if (bits <= 53) {
        m = x.convert_to<double>();
        e = 0;
        return;
    }
    const std::size_t shift = bits - 53;
    Int top = x >> shift;
    m = top.convert_to<double>();
    e = static_cast<long>(shift);
}

} // namespace

double log_int(const Int& x) {
    if (x <= 0) throw std::domain_error("log_int: argument must be positive");
    double m;
    long e;
    split_mantissa(x, m, e);
    return std::log(m) + static_cast<double>(e) * std::log(2.0);
}

double log_rat(const Rat& x) {
    if (x <= 0) throw std::domain_error("log_rat: argument must be positive");
    return log_int(boost::multiprecision::numerator(x)) -
           log_int(boost::multiprecision::denominator(x));
}

double ratio_as_double(const Int& a, const Int& b) {
    if (a == 0) return 0.0;
    if (b == 0) throw std::domain_error("ratio_as_double: zero denominator");
    const bool negative = (a < 0) != (b < 0);
    double ma, mb;
    long ea, eb;
    split_mantissa(boost::multiprecision::abs(a), ma, ea);
    split_mantissa(boost::multiprecision::abs(b), mb, eb);
    const double r = std::ldexp(ma / mb, static_cast<int>(ea - eb));
    return negative ? -r : r;
}

double rat_as_double(const Rat& x) {
    if (x == 0) return 0.0;
    return ratio_as_double(boost::multiprecision::numerator(x),
                           boost::multiprecision::denominator(x));
}

Rat pow_rat(const Rat& x, unsigned long e) {
    Rat result = 1;
    Rat base = x;
    while (e > 0) {
        if (e & 1UL) result *= base;
        base *= base;
        e >>= 1UL;
    }
    return result;
}

} // namespace mixedcodes
