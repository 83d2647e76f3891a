#ifndef MIXEDCODES_PROFILE_HPP
#define MIXEDCODES_PROFILE_HPP

#include "mixedcodes/exact.hpp"

#include <cstdint>
#include <vector>

namespace mixedcodes {

// A coordinate-wise alphabet assignment q_1 <= q_2 <= ... <= q_n (each q_i >= 2)
// for words of length n whose i-th symbol ranges over Z/(q_i Z). Construction
// sorts the input ascending; all downstream conventions (prefix sums, prefix
// products) rely on that order. Power sums P_m = sum_i (q_i - 1)^m for
// m = 1..n are cached eagerly, so a constructed profile is safe to share
// across threads read-only.
class AlphabetProfile {
public:
    explicit AlphabetProfile(std::vector<std::uint32_t> sizes);

    std::size_t length() const { return sizes_.size(); }
    const std::vector<std::uint32_t>& sizes() const { return sizes_; }
    std::uint32_t size_at(std::size_t i) const { return sizes_[i]; }
    std::uint32_t smallest() const { return sizes_.front(); }
    std::uint32_t largest() const { return sizes_.back(); }

    // Number of words, prod_i q_i.
    const Int& space_size() const { return space_size_; }

    // P_m = sum_i (q_i - 1)^m, 1 <= m <= n.
    const Int& power_sum(std::size_t m) const;

    // prod of the k smallest alphabet sizes (k = 0 gives 1).
    Int prefix_product(std::size_t k) const;

    // sum of the k smallest alphabet sizes (k = 0 gives 0).
    std::int64_t prefix_sum(std::size_t k) const;

    bool operator==(const AlphabetProfile& other) const { return sizes_ == other.sizes_; }
    bool operator!=(const AlphabetProfile& other) const { return !(*this == other); }

private:
    std::vector<std::uint32_t> sizes_;
    Int space_size_;
    std::vector<Int> power_sums_; // power_sums_[m-1] = P_m
};

// The four per-profile alphabet means. The reduced variants are means taken
// over the shifted sizes q_i - 1 and then shifted back up by one; they bracket
// sphere-growth rates from below while the arithmetic mean brackets from above.
// Ordering: arithmetic >= geometric >= reduced_geometric >= reduced_harmonic,
// and all four lie in [q_1, q_n].
struct MeansSummary {
    Rat arithmetic;          // (sum q_i) / n, exact
    double geometric;        // (prod q_i)^(1/n)
    double reduced_geometric; // (prod (q_i - 1))^(1/n) + 1
    Rat reduced_harmonic;    // n / (sum 1/(q_i - 1)) + 1, exact
};

MeansSummary means(const AlphabetProfile& profile);

} // namespace mixedcodes

#endif
