#include "mixedcodes/sphere.hpp"

#include "mixedcodes/entropy.hpp"
#include "mixedcodes/errors.hpp"

#include <cmath>

namespace mixedcodes {

const Int& SphereSizeTable::sphere(std::size_t r) const {
    if (r >= sizes_.size()) throw RadiusOutOfRange("sphere: radius exceeds word length");
    return sizes_[r];
}

Int SphereSizeTable::ball(std::size_t r) const {
    if (r >= sizes_.size()) throw RadiusOutOfRange("ball: radius exceeds word length");
    Int total = 0;
    for (std::size_t k = 0; k <= r; ++k) total += sizes_[k];
    return total;
}

SphereSizeTable sphere_sizes(const AlphabetProfile& profile) {
    const std::size_t n = profile.length();
    std::vector<Int> s(n + 1);
    s[0] = 1;
    for (std::size_t r = 1; r <= n; ++r) {
        Int acc = 0;
        for (std::size_t k = 0; k < r; ++k) {
            const Int term = s[r - 1 - k] * profile.power_sum(k + 1);
            if (k % 2 == 0)
                acc += term;
            else
                acc -= term;
        }
        Int quotient, remainder;
        boost::multiprecision::divide_qr(acc, Int(static_cast<unsigned long>(r)), quotient,
                                         remainder);
        if (remainder != 0)
            throw InternalInexactDivision("sphere recursion produced a non-integer value");
        s[r] = std::move(quotient);
    }
    return SphereSizeTable(profile, std::move(s));
}

SphereSizeTable sphere_sizes_poly_oracle(const AlphabetProfile& profile) {
    const std::size_t n = profile.length();
    // Coefficient vector of prod_i (1 + (q_i - 1) x), built one factor at a time.
    std::vector<Int> coeff(n + 1);
    coeff[0] = 1;
    std::size_t degree = 0;
    for (std::uint32_t q : profile.sizes()) {
        const unsigned long weight = q - 1;
        ++degree;
        // In-place multiply by (1 + weight x), highest coefficient first.
        for (std::size_t r = degree; r >= 1; --r) coeff[r] += coeff[r - 1] * weight;
    }
    return SphereSizeTable(profile, std::move(coeff));
}

double BallEntropyBounds::lower() const { return has_lower ? std::exp(log_lower) : 0.0; }
double BallEntropyBounds::upper() const { return std::exp(log_upper); }

BallEntropyBounds ball_entropy_bounds(const AlphabetProfile& profile, std::size_t r) {
    const std::size_t n = profile.length();
    if (r > n) throw RadiusOutOfRange("ball_entropy_bounds: radius exceeds word length");
    const MeansSummary m = means(profile);
    const double q_a = rat_as_double(m.arithmetic);
    // Applicability: r <= (1 - 1/q_a) n, checked exactly via n * sum(q_i) terms.
    // r <= (1 - n/S) n  <=>  r * S <= (S - n) * n  with S = sum q_i.
    const std::int64_t S = profile.prefix_sum(n);
    if (static_cast<std::int64_t>(r) * S > (S - static_cast<std::int64_t>(n)) * static_cast<std::int64_t>(n))
        throw RadiusOutOfApplicableRange("ball_entropy_bounds: radius beyond (1 - 1/q_a) n");

    const double x = static_cast<double>(r) / static_cast<double>(n);
    BallEntropyBounds out;
    out.log_upper = static_cast<double>(n) * entropy(q_a, x) * std::log(q_a);

    const double q_rg = m.reduced_geometric;
    if (x <= 1.0 - 1.0 / q_rg) {
        out.log_lower = static_cast<double>(n) * entropy(q_rg, x) * std::log(q_rg) -
                        std::log(static_cast<double>(n) + 1.0);
        out.has_lower = true;
    } else {
        out.has_lower = false;
        out.log_lower = 0.0;
    }
    return out;
}

NormalizedRootReport normalized_root_report(const SphereSizeTable& table) {
    const std::size_t n = table.max_radius();
    NormalizedRootReport report;
    report.values.reserve(n);
    for (std::size_t r = 1; r <= n; ++r) {
        const double log_value =
            (log_int(table.sphere(r)) - log_int(binomial(n, r))) / static_cast<double>(r);
        report.values.emplace_back(r, std::exp(log_value));
    }
    for (std::size_t i = 0; i + 1 < report.values.size(); ++i) {
        // Tolerate float noise at equality; only a strict rise counts.
        if (report.values[i + 1].second > report.values[i].second * (1.0 + 1e-12)) {
            report.monotone_nonincreasing = false;
            report.first_violation = report.values[i].first;
            break;
        }
    }
    return report;
}

} // namespace mixedcodes
