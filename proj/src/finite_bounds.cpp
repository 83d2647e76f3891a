#include "mixedcodes/finite_bounds.hpp"

#include "mixedcodes/errors.hpp"
#include "mixedcodes/johnson.hpp"

#include <limits>

namespace mixedcodes {

namespace {

void check_distance(const AlphabetProfile& profile, std::size_t d, const char* who) {
    if (d < 1 || d > profile.length())
        throw DistanceOutOfRange(std::string(who) + ": d must lie in 1..n");
}

} // namespace

Int gv_lower(const AlphabetProfile& profile, std::size_t d) {
    check_distance(profile, d, "gv_lower");
    const SphereSizeTable table = sphere_sizes(profile);
    const Int ball = table.ball(d - 1);
    Int quotient, remainder;
    boost::multiprecision::divide_qr(profile.space_size(), ball, quotient, remainder);
    if (remainder != 0) ++quotient;
    return quotient;
}

Int sphere_packing_upper(const AlphabetProfile& profile, std::size_t d) {
    check_distance(profile, d, "sphere_packing_upper");
    const SphereSizeTable table = sphere_sizes(profile);
    const Int ball = table.ball((d - 1) / 2);
    return profile.space_size() / ball;
}

Int singleton_upper(const AlphabetProfile& profile, std::size_t d) {
    check_distance(profile, d, "singleton_upper");
    return profile.prefix_product(profile.length() - d + 1);
}

Rat pigeonhole_transfer(const SphereSizeTable& table, std::size_t r,
                        const Rat& sphere_code_bound) {
    if (r > table.max_radius())
        throw RadiusOutOfRange("pigeonhole_transfer: radius exceeds word length");
    if (sphere_code_bound < 0)
        throw ArgOutOfRange("pigeonhole_transfer: bound must be nonnegative");
    return Rat(table.profile().space_size()) / Rat(table.sphere(r)) * sphere_code_bound;
}

EbBound elias_bassalygo_upper(const AlphabetProfile& profile, std::size_t d) {
    check_distance(profile, d, "elias_bassalygo_upper");
    const std::size_t n = profile.length();
    const Rat q_a = Rat(profile.prefix_sum(n), static_cast<std::int64_t>(n));
    // d < (1 - 1/q_a) n  <=>  d S < n (S - n) with S = sum q_i, exactly.
    const std::int64_t S = profile.prefix_sum(n);
    if (static_cast<std::int64_t>(d) * S >=
        static_cast<std::int64_t>(n) * (S - static_cast<std::int64_t>(n)))
        throw NotApplicable("elias_bassalygo_upper: requires d < (1 - 1/q_a) n");

    const SphereSizeTable table = sphere_sizes(profile);
    EbBound best;
    for (std::size_t r = 1; r <= n; ++r) {
        if (!johnson_condition(q_a, r, d, n)) continue;
        const Rat confined = constant_weight_bound(profile, r, d);
        const Rat value = pigeonhole_transfer(table, r, confined);
        if (!best.applicable || value < best.value) {
            best.applicable = true;
            best.value = value;
            best.radius = r;
        }
    }
    return best;
}

std::vector<BoundResult> all_finite_bounds(const AlphabetProfile& profile, std::size_t d) {
    std::vector<BoundResult> out;
    out.push_back({FiniteBoundKind::GilbertVarshamovLower, false, true, Rat(gv_lower(profile, d)),
                   std::nullopt});
    out.push_back({FiniteBoundKind::SpherePackingUpper, true, true,
                   Rat(sphere_packing_upper(profile, d)), std::nullopt});
    out.push_back({FiniteBoundKind::SingletonUpper, true, true, Rat(singleton_upper(profile, d)),
                   std::nullopt});
    BoundResult eb{FiniteBoundKind::EliasBassalygoUpper, true, false, Rat(0), std::nullopt};
    try {
        const EbBound bound = elias_bassalygo_upper(profile, d);
        if (bound.applicable) {
            eb.applicable = true;
            eb.value = bound.value;
            eb.radius = bound.radius;
        }
    } catch (const NotApplicable&) {
        // Outside the bound's distance range; reported as inapplicable.
    }
    out.push_back(std::move(eb));
    return out;
}

Rat min_upper_bound(const std::vector<BoundResult>& results) {
    bool found = false;
    Rat best;
    for (const BoundResult& r : results) {
        if (!r.is_upper || !r.applicable) continue;
        if (!found || r.value < best) {
            best = r.value;
            found = true;
        }
    }
    if (!found) throw NotApplicable("min_upper_bound: no applicable upper bound");
    return best;
}

} // namespace mixedcodes
