#include "mixedcodes/space.hpp"

namespace mixedcodes {

std::size_t weight(const GroupElement& x) {
    std::size_t w = 0;
    for (std::uint32_t c : x.coords)
        if (c != 0) ++w;
    return w;
}

SpaceIndexer::SpaceIndexer(AlphabetProfile profile, std::uint64_t max_points)
    : profile_(std::move(profile)) {
    if (profile_.space_size() > Int(max_points))
        throw SpaceTooLarge("space too large to index densely");
    strides_.reserve(profile_.length());
    for (std::uint32_t q : profile_.sizes()) {
        strides_.push_back(size_);
        size_ *= q;
    }
}

std::size_t SpaceIndexer::encode(const GroupElement& x) const {
    if (x.coords.size() != profile_.length())
        throw ProfileMismatch("encode: wrong number of coordinates");
    std::size_t index = 0;
    for (std::size_t i = 0; i < x.coords.size(); ++i) {
        if (x.coords[i] >= profile_.size_at(i))
            throw IndexOutOfRange("encode: coordinate exceeds its alphabet");
        index += x.coords[i] * strides_[i];
    }
    return index;
}

GroupElement SpaceIndexer::decode(std::size_t index) const {
    GroupElement x;
    x.coords.resize(profile_.length());
    decode_into(index, x.coords);
    return x;
}

void SpaceIndexer::decode_into(std::size_t index, std::vector<std::uint32_t>& coords) const {
    if (index >= size_) throw IndexOutOfRange("decode: index exceeds space size");
    coords.resize(profile_.length());
    for (std::size_t i = 0; i < coords.size(); ++i) {
        const std::size_t q = profile_.size_at(i);
        coords[i] = static_cast<std::uint32_t>(index % q);
        index /= q;
    }
}

std::size_t SpaceIndexer::weight_of(std::size_t index) const {
    if (index >= size_) throw IndexOutOfRange("weight_of: index exceeds space size");
    std::size_t w = 0;
    for (std::size_t i = 0; i < profile_.length(); ++i) {
        const std::size_t q = profile_.size_at(i);
        if (index % q != 0) ++w;
        index /= q;
    }
    return w;
}

std::size_t SpaceIndexer::negate(std::size_t index) const {
    if (index >= size_) throw IndexOutOfRange("negate: index exceeds space size");
    std::size_t result = 0;
    for (std::size_t i = 0; i < profile_.length(); ++i) {
        const std::size_t q = profile_.size_at(i);
        const std::size_t digit = index % q;
        index /= q;
        result += (digit == 0 ? 0 : q - digit) * strides_[i];
    }
    return result;
}

std::size_t SpaceIndexer::add(std::size_t a, std::size_t b) const {
    if (a >= size_ || b >= size_) throw IndexOutOfRange("add: index exceeds space size");
    std::size_t result = 0;
    for (std::size_t i = 0; i < profile_.length(); ++i) {
        const std::size_t q = profile_.size_at(i);
        const std::size_t da = a % q;
        const std::size_t db = b % q;
        a /= q;
        b /= q;
        result += ((da + db) % q) * strides_[i];
    }
    return result;
}

std::size_t SpaceIndexer::subtract(std::size_t a, std::size_t b) const {
    return add(a, negate(b));
}

namespace {

// DFS over coordinates from the last (largest stride) down, emitting indices
// in ascending order. allowed[i] == false forces coordinate i to zero.
void collect_by_weight(const SpaceIndexer& space, std::size_t coord, std::size_t base,
                       std::size_t weight_left, bool exact,
                       const std::vector<bool>* allowed, std::size_t usable_below,
                       std::vector<std::size_t>& out) {
    if (coord == 0) {
        if (!exact || weight_left == 0) out.push_back(base);
        return;
    }
    const std::size_t i = coord - 1;
    // Remaining usable coordinates cannot supply the still-required weight.
    if (exact && weight_left > usable_below) return;
    const bool usable = (allowed == nullptr) || (*allowed)[i];
    const std::size_t below = usable ? usable_below - 1 : usable_below;
    const std::size_t q = space.profile().size_at(i);
    // Zero digit first keeps the output ascending.
    collect_by_weight(space, i, base, weight_left, exact, allowed, below, out);
    if (usable && weight_left > 0) {
        for (std::size_t v = 1; v < q; ++v) {
            collect_by_weight(space, i, base + v * space.stride_at(i), weight_left - 1, exact,
                              allowed, below, out);
        }
    }
}

} // namespace

std::vector<std::size_t> sphere_indices(const SpaceIndexer& space, std::size_t r) {
    if (r > space.dimensions()) throw RadiusOutOfRange("sphere_indices: radius exceeds length");
    std::vector<std::size_t> out;
    collect_by_weight(space, space.dimensions(), 0, r, true, nullptr, space.dimensions(), out);
    return out;
}

std::vector<std::size_t> sphere_indices(const SpaceIndexer& space, std::size_t r,
                                        const std::vector<std::size_t>& support) {
    if (r > space.dimensions()) throw RadiusOutOfRange("sphere_indices: radius exceeds length");
    std::vector<bool> allowed(space.dimensions(), false);
    std::size_t usable = 0;
    for (std::size_t i : support) {
        if (i >= space.dimensions())
            throw IndexOutOfRange("sphere_indices: support coordinate out of range");
        if (!allowed[i]) ++usable;
        allowed[i] = true;
    }
    std::vector<std::size_t> out;
    collect_by_weight(space, space.dimensions(), 0, r, true, &allowed, usable, out);
    return out;
}

std::vector<std::size_t> ball_indices(const SpaceIndexer& space, std::size_t r) {
    if (r > space.dimensions()) throw RadiusOutOfRange("ball_indices: radius exceeds length");
    std::vector<std::size_t> out;
    collect_by_weight(space, space.dimensions(), 0, r, false, nullptr, space.dimensions(), out);
    return out;
}

} // namespace mixedcodes
