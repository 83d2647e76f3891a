#ifndef MIXEDCODES_DISTRIBUTION_HPP
#define MIXEDCODES_DISTRIBUTION_HPP

#include "mixedcodes/exact.hpp"
#include "mixedcodes/profile.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mixedcodes {

// A limiting alphabet composition: which alphabet sizes appear and with what
// asymptotic coordinate fraction. Fractions are exact rationals that must sum
// to exactly 1; entries are kept sorted by alphabet size ascending (the same
// convention finite profiles use).
struct DistributionEntry {
    std::uint32_t alphabet = 0;
    Rat fraction;
};

class AlphabetDistribution {
public:
    explicit AlphabetDistribution(std::vector<DistributionEntry> entries);

    static AlphabetDistribution mono(std::uint32_t alphabet);
    static AlphabetDistribution from_profile(const AlphabetProfile& profile);

    const std::vector<DistributionEntry>& entries() const { return entries_; }

    Rat arithmetic_mean() const;
    double geometric_mean() const;
    double reduced_geometric_mean() const;
    Rat reduced_harmonic_mean() const;

    // Length-n profile whose composition matches the fractions as closely as
    // integers allow: largest-remainder rounding, ties resolved toward the
    // smaller alphabet. Exact when every n * fraction is an integer.
    AlphabetProfile instantiate(std::size_t n) const;

    // sum of q * dt over the `coverage` fraction of coordinates with the
    // smallest alphabets (0 <= coverage <= 1). The integral analogue of a
    // prefix sum over an ascending profile.
    double partial_size_mean(double coverage) const;

    // Same integral with ln(q) in place of q; partial_log_mean(1) = ln(q_g).
    double partial_log_mean(double coverage) const;

private:
    std::vector<DistributionEntry> entries_;
};

// Parses "q:frac,q:frac,..." where frac is a decimal ("0.25") or a ratio
// ("1/4"), into an exact distribution. Throws InvalidDistribution on
// malformed input or fractions that do not sum to exactly 1.
AlphabetDistribution parse_distribution(const std::string& text);

// Parses "q1,q2,..." into a profile. Throws on malformed input.
AlphabetProfile parse_profile(const std::string& text);

} // namespace mixedcodes

#endif
