#include "mixedcodes/distribution.hpp"

#include "mixedcodes/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>

namespace mixedcodes {

AlphabetDistribution::AlphabetDistribution(std::vector<DistributionEntry> entries) {
    if (entries.empty()) throw InvalidDistribution("distribution needs at least one entry");
    std::map<std::uint32_t, Rat> merged;
    Rat total = 0;
    for (const DistributionEntry& e : entries) {
        if (e.alphabet < 2) throw AlphabetTooSmall("every alphabet size must be at least 2");
        if (e.fraction < 0) throw InvalidDistribution("fractions must be nonnegative");
        merged[e.alphabet] += e.fraction;
        total += e.fraction;
    }
    if (total != 1) throw InvalidDistribution("fractions must sum to exactly 1");
    for (const auto& [alphabet, fraction] : merged) {
        if (fraction > 0) entries_.push_back({alphabet, fraction});
    }
}

AlphabetDistribution AlphabetDistribution::mono(std::uint32_t alphabet) {
    return AlphabetDistribution({{alphabet, Rat(1)}});
}

AlphabetDistribution AlphabetDistribution::from_profile(const AlphabetProfile& profile) {
    std::map<std::uint32_t, std::size_t> counts;
    for (std::uint32_t q : profile.sizes()) ++counts[q];
    std::vector<DistributionEntry> entries;
    for (const auto& [alphabet, count] : counts) {
        entries.push_back({alphabet, Rat(static_cast<std::int64_t>(count),
                                         static_cast<std::int64_t>(profile.length()))});
    }
    return AlphabetDistribution(std::move(entries));
}

Rat AlphabetDistribution::arithmetic_mean() const {
    Rat mean = 0;
    for (const DistributionEntry& e : entries_) mean += e.fraction * e.alphabet;
    return mean;
}

double AlphabetDistribution::geometric_mean() const {
    double log_mean = 0.0;
    for (const DistributionEntry& e : entries_)
        log_mean += rat_as_double(e.fraction) * std::log(static_cast<double>(e.alphabet));
    return std::exp(log_mean);
}

double AlphabetDistribution::reduced_geometric_mean() const {
    double log_mean = 0.0;
    for (const DistributionEntry& e : entries_)
        log_mean += rat_as_double(e.fraction) * std::log(static_cast<double>(e.alphabet - 1));
    return std::exp(log_mean) + 1.0;
}

Rat AlphabetDistribution::reduced_harmonic_mean() const {
    Rat inv_sum = 0;
    for (const DistributionEntry& e : entries_) inv_sum += e.fraction / (e.alphabet - 1);
    return 1 / inv_sum + 1;
}

AlphabetProfile AlphabetDistribution::instantiate(std::size_t n) const {
    if (n == 0) throw EmptyProfile("instantiate: n must be positive");
    // Largest-remainder rounding of n * fraction, exact rational remainders.
    struct Share {
        std::size_t entry;
        std::size_t base;
        Rat remainder;
    };
    std::vector<Share> shares;
    std::size_t assigned = 0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const Rat target = entries_[i].fraction * static_cast<std::int64_t>(n);
        const Int floor_int = boost::multiprecision::numerator(target) /
                              boost::multiprecision::denominator(target);
        const std::size_t base = floor_int.convert_to<std::size_t>();
        shares.push_back({i, base, target - Rat(floor_int)});
        assigned += base;
    }
    // Hand the leftover coordinates to the largest remainders; ties go to the
    // smaller alphabet (entries are sorted ascending, stable sort keeps that).
    std::stable_sort(shares.begin(), shares.end(),
                     [](const Share& a, const Share& b) { return a.remainder > b.remainder; });
    std::size_t leftover = n - assigned;
    for (Share& s : shares) {
        if (leftover == 0) break;
        ++s.base;
        --leftover;
    }
    std::vector<std::uint32_t> sizes;
    sizes.reserve(n);
    for (const Share& s : shares) {
        for (std::size_t k = 0; k < s.base; ++k) sizes.push_back(entries_[s.entry].alphabet);
    }
    return AlphabetProfile(std::move(sizes));
}

double AlphabetDistribution::partial_size_mean(double coverage) const {
    if (!(coverage >= 0.0 && coverage <= 1.0))
        throw ArgOutOfRange("partial_size_mean: coverage must lie in [0, 1]");
    double remaining = coverage;
    double total = 0.0;
    for (const DistributionEntry& e : entries_) {
        if (remaining <= 0.0) break;
        const double take = std::min(remaining, rat_as_double(e.fraction));
        total += take * static_cast<double>(e.alphabet);
        remaining -= take;
    }
    return total;
}

double AlphabetDistribution::partial_log_mean(double coverage) const {
    if (!(coverage >= 0.0 && coverage <= 1.0))
        throw ArgOutOfRange("partial_log_mean: coverage must lie in [0, 1]");
    double remaining = coverage;
    double total = 0.0;
    for (const DistributionEntry& e : entries_) {
        if (remaining <= 0.0) break;
        const double take = std::min(remaining, rat_as_double(e.fraction));
        total += take * std::log(static_cast<double>(e.alphabet));
        remaining -= take;
    }
    return total;
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = text.find(sep, start);
        if (end == std::string::npos) {
            parts.push_back(text.substr(start));
            break;
        }
        parts.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return parts;
}

std::uint32_t parse_alphabet(const std::string& token) {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
        throw InvalidDistribution("malformed alphabet size '" + token + "'");
    const unsigned long value = std::strtoul(token.c_str(), nullptr, 10);
    if (value < 2 || value > 1u << 16)
        throw AlphabetTooSmall("alphabet size '" + token + "' out of range");
    return static_cast<std::uint32_t>(value);
}

// Decimal ("0.25") or ratio ("1/4") to an exact rational.
Rat parse_fraction(const std::string& token) {
    const std::size_t slash = token.find('/');
    if (slash != std::string::npos) {
        const std::string num = token.substr(0, slash);
        const std::string den = token.substr(slash + 1);
        if (num.empty() || den.empty() ||
            num.find_first_not_of("0123456789") != std::string::npos ||
            den.find_first_not_of("0123456789") != std::string::npos)
            throw InvalidDistribution("malformed fraction '" + token + "'");
        const Int d(den);
        if (d == 0) throw InvalidDistribution("zero denominator in '" + token + "'");
        return Rat(Int(num), d);
    }
    const std::size_t dot = token.find('.');
    const std::string integral = (dot == std::string::npos) ? token : token.substr(0, dot);
    const std::string decimals = (dot == std::string::npos) ? "" : token.substr(dot + 1);
    if ((integral.empty() && decimals.empty()) ||
        integral.find_first_not_of("0123456789") != std::string::npos ||
        decimals.find_first_not_of("0123456789") != std::string::npos)
        throw InvalidDistribution("malformed fraction '" + token + "'");
    Rat value = integral.empty() ? Rat(0) : Rat(Int(integral));
    if (!decimals.empty()) {
        Int scale = 1;
        for (std::size_t i = 0; i < decimals.size(); ++i) scale *= 10;
        value += Rat(Int(decimals), scale);
    }
    return value;
}

} // namespace

AlphabetDistribution parse_distribution(const std::string& text) {
    std::vector<DistributionEntry> entries;
    for (const std::string& part : split(text, ',')) {
        const std::size_t colon = part.find(':');
        if (colon == std::string::npos)
            throw InvalidDistribution("expected 'alphabet:fraction', got '" + part + "'");
        entries.push_back(
            {parse_alphabet(part.substr(0, colon)), parse_fraction(part.substr(colon + 1))});
    }
    return AlphabetDistribution(std::move(entries));
}

AlphabetProfile parse_profile(const std::string& text) {
    std::vector<std::uint32_t> sizes;
    for (const std::string& part : split(text, ',')) sizes.push_back(parse_alphabet(part));
    return AlphabetProfile(std::move(sizes));
}

} // namespace mixedcodes
