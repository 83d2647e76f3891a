#ifndef MIXEDCODES_FINITE_BOUNDS_HPP
#define MIXEDCODES_FINITE_BOUNDS_HPP

#include "mixedcodes/exact.hpp"
#include "mixedcodes/profile.hpp"
#include "mixedcodes/sphere.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace mixedcodes {

// Exact finite-length bounds on A(n, d), the largest code size at minimum
// distance d. Lower and upper bounds sandwich the true value; everything is
// computed in exact integer/rational arithmetic, with flooring of rational
// upper bounds left to the presentation layer.

// Covering argument: A(n, d) >= ceil(prod q_i / |B_{d-1}(0)|).
Int gv_lower(const AlphabetProfile& profile, std::size_t d);

// Packing argument: A(n, d) <= floor(prod q_i / |B_t(0)|), t = floor((d-1)/2).
Int sphere_packing_upper(const AlphabetProfile& profile, std::size_t d);

// Projection argument: A(n, d) <= prod of the n - d + 1 smallest alphabet
// sizes (the ascending sort makes the projection as tight as possible).
Int singleton_upper(const AlphabetProfile& profile, std::size_t d);

// Averaging argument: if every code in the weight-r sphere with minimum
// distance >= d has at most sphere_code_bound elements, then
// A(n, d) <= (prod q_i / s_r) * sphere_code_bound.
Rat pigeonhole_transfer(const SphereSizeTable& table, std::size_t r, const Rat& sphere_code_bound);

struct EbBound {
    bool applicable = false; // false when no radius passes the side conditions
    Rat value;               // upper bound on A(n, d), valid when applicable
    std::size_t radius = 0;  // minimizing radius (smallest wins ties)
};

// Combines the averaging step with the ball-confinement bound: minimizes
//   (prod q_i / s_r) * (q_a - 1) n d / (q_a r^2 - (q_a - 1)(2r - d) n)
// over integer radii 1 <= r < J_{q_a}(d/n) n that also satisfy the exact
// denominator condition. Requires d < (1 - 1/q_a) n (NotApplicable thrown
// otherwise); returns applicable == false when no radius qualifies.
EbBound elias_bassalygo_upper(const AlphabetProfile& profile, std::size_t d);

enum class FiniteBoundKind {
    GilbertVarshamovLower,
    SpherePackingUpper,
    SingletonUpper,
    EliasBassalygoUpper,
};

struct BoundResult {
    FiniteBoundKind kind;
    bool is_upper = false;
    bool applicable = false;
    Rat value;                          // exact; integral for all but EB
    std::optional<std::size_t> radius;  // EB minimizer
};

// All four bounds for one (profile, d), for display and sandwich checks.
std::vector<BoundResult> all_finite_bounds(const AlphabetProfile& profile, std::size_t d);

// Smallest applicable upper bound among the results (exact rational).
Rat min_upper_bound(const std::vector<BoundResult>& results);

} // namespace mixedcodes

#endif
