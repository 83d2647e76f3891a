#include "mixedcodes/johnson.hpp"

#include "mixedcodes/errors.hpp"

#include <cmath>

namespace mixedcodes {

double johnson_radius(double q, double delta) {
    if (!(q > 1.0)) throw ArgOutOfRange("johnson_radius: q must exceed 1");
    const double beta = 1.0 - 1.0 / q;
    if (!(delta >= 0.0 && delta < beta))
        throw DeltaOutOfRange("johnson_radius: delta must lie in [0, 1 - 1/q)");
    return beta * (1.0 - std::sqrt(1.0 - delta / beta));
}

bool johnson_condition(const Rat& q, std::size_t r, std::size_t d, std::size_t n) {
    if (q <= 1) throw ArgOutOfRange("johnson_condition: q must exceed 1");
    if (n == 0 || d > n) throw DistanceOutOfRange("johnson_condition: need 1 <= d <= n");
    const Rat beta = 1 - Rat(1) / q;
    const Rat delta = Rat(static_cast<std::int64_t>(d), static_cast<std::int64_t>(n));
    if (delta >= beta) return false; // radius undefined at or past 1 - 1/q
    const Rat beta_n = beta * static_cast<std::int64_t>(n);
    const Rat r_rat = static_cast<std::int64_t>(r);
    if (r_rat >= beta_n) return false;
    // Both sides of sqrt(1 - delta/beta) < 1 - r/(beta n) are nonnegative
    // here, so squaring preserves the inequality.
    const Rat lhs = 1 - delta / beta;
    const Rat rhs = 1 - r_rat / beta_n;
    return lhs < rhs * rhs;
}

Rat constant_weight_bound(const AlphabetProfile& profile, std::size_t r, std::size_t d) {
    const std::size_t n = profile.length();
    if (d < 1 || d > n) throw DistanceOutOfRange("constant_weight_bound: need 1 <= d <= n");
    if (r > n) throw RadiusOutOfRange("constant_weight_bound: radius exceeds word length");
    const Rat q_a = Rat(profile.prefix_sum(n), static_cast<std::int64_t>(n));
    const Rat nn = static_cast<std::int64_t>(n);
    const Rat rr = static_cast<std::int64_t>(r);
    // 2r - d may be negative; keep everything rational and signed.
    const Rat two_r_minus_d = 2 * rr - static_cast<std::int64_t>(d);
    const Rat denom = q_a * rr * rr - (q_a - 1) * two_r_minus_d * nn;
    if (denom <= 0)
        throw PreconditionViolated(
            "constant_weight_bound: q_a r^2 > (q_a - 1)(2r - d) n must hold");
    return (q_a - 1) * nn * static_cast<std::int64_t>(d) / denom;
}

Int list_size_bound(const AlphabetProfile& profile, std::size_t d, std::size_t rho) {
    const std::size_t n = profile.length();
    if (d < 1 || d > n) throw DistanceOutOfRange("list_size_bound: need 1 <= d <= n");
    const Rat q_a = Rat(profile.prefix_sum(n), static_cast<std::int64_t>(n));
    // d < (1 - 1/q_a) n, exactly.
    const Rat beta_n = (1 - Rat(1) / q_a) * static_cast<std::int64_t>(n);
    if (!(Rat(static_cast<std::int64_t>(d)) < beta_n))
        throw PreconditionViolated("list_size_bound: d must be below (1 - 1/q_a) n");
    if (!johnson_condition(q_a, rho, d, n))
        throw PreconditionViolated("list_size_bound: rho must be below J_{q_a}(d/n) n");
    const Rat value = (q_a - 1) * static_cast<std::int64_t>(d) * static_cast<std::int64_t>(n);
    // ceil of a positive rational.
    Int quotient, remainder;
    boost::multiprecision::divide_qr(boost::multiprecision::numerator(value),
                                     boost::multiprecision::denominator(value), quotient,
                                     remainder);
    if (remainder != 0) ++quotient;
    return quotient;
}

} // namespace mixedcodes
