#ifndef MIXEDCODES_SPACE_HPP
#define MIXEDCODES_SPACE_HPP

#include "mixedcodes/errors.hpp"
#include "mixedcodes/profile.hpp"

#include <cstdint>
#include <vector>

namespace mixedcodes {

// One word of the mixed space, coordinate i ranging over 0..q_i-1.
struct GroupElement {
    std::vector<std::uint32_t> coords;

    bool operator==(const GroupElement& other) const { return coords == other.coords; }
};

// Characters are indexed by the same coordinate tuples as group elements
// (coordinate t_i selects the t_i-th power of the fixed generator character
// of Z/(q_i Z)); the alias keeps call sites readable.
using CharacterIndex = GroupElement;

std::size_t weight(const GroupElement& x);

// Dense mixed-radix indexing of a small-enough space: index(x) = sum_i x_i *
// prod_{j<i} q_j, so coordinate 0 (the smallest alphabet) varies fastest.
// Group arithmetic and neighbor enumeration work directly on indices.
class SpaceIndexer {
public:
    // Throws SpaceTooLarge when prod q_i exceeds max_points (default 2^40,
    // an addressability limit rather than a work budget; enumeration-heavy
    // callers apply their own much smaller caps).
    explicit SpaceIndexer(AlphabetProfile profile,
                          std::uint64_t max_points = (std::uint64_t(1) << 40));

    const AlphabetProfile& profile() const { return profile_; }
    std::size_t size() const { return size_; }
    std::size_t dimensions() const { return profile_.length(); }

    std::size_t stride_at(std::size_t i) const { return strides_[i]; }

    std::size_t encode(const GroupElement& x) const;
    GroupElement decode(std::size_t index) const;
    void decode_into(std::size_t index, std::vector<std::uint32_t>& coords) const;

    std::size_t weight_of(std::size_t index) const;
    std::size_t negate(std::size_t index) const;
    std::size_t add(std::size_t a, std::size_t b) const;
    std::size_t subtract(std::size_t a, std::size_t b) const;

    // Visits every index at Hamming distance exactly 1 from the given one.
    template <typename Fn>
    void for_each_neighbor(std::size_t index, Fn&& fn) const {
        const std::size_t n = profile_.length();
        std::size_t rest = index;
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t q = profile_.size_at(i);
            const std::size_t digit = rest % q;
            rest /= q;
            const std::size_t base = index - digit * strides_[i];
            for (std::size_t v = 0; v < q; ++v) {
                if (v != digit) fn(base + v * strides_[i]);
            }
        }
    }

private:
    AlphabetProfile profile_;
    std::size_t size_ = 1;
    std::vector<std::size_t> strides_;
};

// Ascending index lists of the weight-r sphere / radius-r ball around 0,
// generated by digit DFS so only members are visited. The support overload
// restricts to words whose nonzero coordinates lie inside the given
// (0-based, strictly increasing) coordinate set.
std::vector<std::size_t> sphere_indices(const SpaceIndexer& space, std::size_t r);
std::vector<std::size_t> sphere_indices(const SpaceIndexer& space, std::size_t r,
                                        const std::vector<std::size_t>& support);
std::vector<std::size_t> ball_indices(const SpaceIndexer& space, std::size_t r);

} // namespace mixedcodes

#endif
