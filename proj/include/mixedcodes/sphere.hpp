#ifndef MIXEDCODES_SPHERE_HPP
#define MIXEDCODES_SPHERE_HPP

#include "mixedcodes/exact.hpp"
#include "mixedcodes/profile.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace mixedcodes {

// Exact Hamming-sphere sizes s_r = |{x : wt(x) = r}| for r = 0..n, together
// with the profile they were computed from. Invariants: s_0 = 1,
// s_n = prod (q_i - 1), sum_r s_r = prod q_i, and the normalized ratio
// (r+1) s_{r+1} / ((n-r) s_r) is non-increasing in r.
class SphereSizeTable {
public:
    SphereSizeTable(AlphabetProfile profile, std::vector<Int> sizes)
        : profile_(std::move(profile)), sizes_(std::move(sizes)) {}

    const AlphabetProfile& profile() const { return profile_; }
    std::size_t max_radius() const { return sizes_.size() - 1; }

    // s_r; throws RadiusOutOfRange for r > n.
    const Int& sphere(std::size_t r) const;

    // |B_r(0)| = sum_{k <= r} s_k; throws RadiusOutOfRange for r > n.
    Int ball(std::size_t r) const;

private:
    AlphabetProfile profile_;
    std::vector<Int> sizes_; // sizes_[r] = s_r
};

// Sphere sizes via the power-sum recursion
//   r * s_r = sum_{k=0}^{r-1} (-1)^k s_{r-1-k} P_{k+1},
// every division exact (InternalInexactDivision otherwise). O(n^2) big-int work.
SphereSizeTable sphere_sizes(const AlphabetProfile& profile);

// Independent route: expand prod_i (1 + (q_i - 1) x); the coefficient of x^r
// is s_r. Used to cross-check the recursion, never as its implementation.
SphereSizeTable sphere_sizes_poly_oracle(const AlphabetProfile& profile);

// Entropy-domain bracket of the ball size, kept in log form so large n cannot
// overflow: for 0 <= r <= (1 - 1/q_arith) n,
//   (1/(n+1)) * q_rg^(n H_{q_rg}(r/n)) <= |B_r(0)| <= q_a^(n H_{q_a}(r/n))
// with q_rg the reduced geometric mean and q_a the arithmetic mean. The lower
// side needs r/n <= 1 - 1/q_rg to evaluate its entropy on the increasing
// branch; has_lower is false when that fails (upper side always present).
struct BallEntropyBounds {
    double log_lower = 0.0;
    double log_upper = 0.0;
    bool has_lower = true;
    double lower() const; // exponentiates on demand
    double upper() const;
};

BallEntropyBounds ball_entropy_bounds(const AlphabetProfile& profile, std::size_t r);

// Report on the (s_r / C(n,r))^(1/r) sequence, r = 1..n. Whether it is
// monotone non-increasing is an open question: this is diagnostic output
// only and is never asserted anywhere in the library or its tests.
struct NormalizedRootReport {
    std::vector<std::pair<std::size_t, double>> values; // (r, (s_r/C(n,r))^(1/r))
    bool monotone_nonincreasing = true;
    std::size_t first_violation = 0; // r with value[r] < value[r+1], 0 if none
};

NormalizedRootReport normalized_root_report(const SphereSizeTable& table);

} // namespace mixedcodes

#endif
