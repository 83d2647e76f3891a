#include "mixedcodes/profile.hpp"

#include "mixedcodes/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace mixedcodes {

AlphabetProfile::AlphabetProfile(std::vector<std::uint32_t> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.empty()) throw EmptyProfile("profile needs at least one coordinate");
    for (std::uint32_t q : sizes_) {
        if (q < 2) throw AlphabetTooSmall("every alphabet size must be at least 2");
    }
    std::sort(sizes_.begin(), sizes_.end());

    space_size_ = 1;
    for (std::uint32_t q : sizes_) space_size_ *= q;

    // Group equal sizes so each power sum costs one small multiply per
    // distinct value instead of one per coordinate.
    std::map<std::uint32_t, std::size_t> counts;
    for (std::uint32_t q : sizes_) ++counts[q - 1];

    const std::size_t n = sizes_.size();
    power_sums_.resize(n);
    std::vector<std::pair<Int, std::size_t>> running; // (value^m, multiplicity)
    running.reserve(counts.size());
    for (const auto& [value, count] : counts) running.emplace_back(Int(1), count);
    std::size_t idx;
    for (std::size_t m = 1; m <= n; ++m) {
        Int total = 0;
        idx = 0;
        for (const auto& [value, count] : counts) {
            running[idx].first *= value;
            total += running[idx].first * static_cast<unsigned long>(count);
            ++idx;
        }
        power_sums_[m - 1] = std::move(total);
    }
}

const Int& AlphabetProfile::power_sum(std::size_t m) const {
    if (m < 1 || m > power_sums_.size())
        throw IndexOutOfRange("power_sum: m must lie in 1..n");
    return power_sums_[m - 1];
}

Int AlphabetProfile::prefix_product(std::size_t k) const {
    if (k > sizes_.size()) throw IndexOutOfRange("prefix_product: k must lie in 0..n");
    Int result = 1;
    for (std::size_t i = 0; i < k; ++i) result *= sizes_[i];
    return result;
}

std::int64_t AlphabetProfile::prefix_sum(std::size_t k) const {
    if (k > sizes_.size()) throw IndexOutOfRange("prefix_sum: k must lie in 0..n");
    std::int64_t result = 0;
    for (std::size_t i = 0; i < k; ++i) result += sizes_[i];
    return result;
}

MeansSummary means(const AlphabetProfile& profile) {
    const std::size_t n = profile.length();
    MeansSummary out;
    out.arithmetic = Rat(profile.prefix_sum(n), static_cast<std::int64_t>(n));

    double log_sum = 0.0;
    double log_shifted_sum = 0.0;
    Rat inv_shifted_sum = 0;
    for (std::uint32_t q : profile.sizes()) {
        log_sum += std::log(static_cast<double>(q));
        log_shifted_sum += std::log(static_cast<double>(q - 1));
        inv_shifted_sum += Rat(1, q - 1);
    }
    out.geometric = std::exp(log_sum / static_cast<double>(n));
    out.reduced_geometric = std::exp(log_shifted_sum / static_cast<double>(n)) + 1.0;
    out.reduced_harmonic = Rat(static_cast<std::int64_t>(n)) / inv_shifted_sum + 1;
    return out;
}

} // namespace mixedcodes
