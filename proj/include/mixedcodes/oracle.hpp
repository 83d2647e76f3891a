#ifndef MIXEDCODES_ORACLE_HPP
#define MIXEDCODES_ORACLE_HPP

#include "mixedcodes/profile.hpp"
#include "mixedcodes/space.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace mixedcodes {

// Brute-force ground truth for small spaces. Everything here favors
// transparency over speed: plain enumeration, plain branch-and-bound,
// deterministic orderings, no algebraic shortcuts, so results can serve as
// oracles for the analytic bounds.

// A concrete code: element indices (ascending, in SpaceIndexer order) plus its
// exact minimum distance. min_distance == n + 1 encodes the empty/singleton
// convention (no pair to measure).
struct CodeSet {
    AlphabetProfile profile;
    std::vector<std::size_t> elements;
    std::size_t min_distance = 0;
};

// Builds a CodeSet from explicit indices, computing the minimum distance.
CodeSet make_code_set(const SpaceIndexer& space, std::vector<std::size_t> elements);

// Elements of weight exactly r, optionally restricted to support inside the
// given coordinate set. Throws SpaceTooLarge when prod q_i > max_points.
std::vector<GroupElement> enumerate_sphere(const AlphabetProfile& profile, std::size_t r,
                                           const std::vector<std::size_t>* support = nullptr,
                                           std::uint64_t max_points = 100000);

// Count of elements per weight 0..n by direct odometer walk over the whole
// space; the slow-but-obvious cross-check for the sphere-size algebra.
std::vector<std::uint64_t> weight_histogram(const AlphabetProfile& profile,
                                            std::uint64_t max_points = 100000);

enum class Ambient { WholeSpace, Sphere, Ball };

struct MaxCodeOptions {
    std::size_t exact_cap = 2000;       // largest ambient for exact search
    double budget_seconds = 60.0;       // wall-clock budget for the search
    std::uint64_t max_points = 100000;  // absolute enumeration cap
};

struct MaxCodeResult {
    CodeSet code;
    bool exact = false;        // true when optimality was proved
    std::uint64_t nodes = 0;   // search nodes explored
};

// Largest code with minimum distance >= d inside the chosen ambient set
// (whole space, the weight-r sphere, or the radius-r ball), found as a
// maximum independent set of the conflict graph (edges join pairs at distance
// < d) by branch-and-bound with a greedy clique-cover bound. Above exact_cap
// or past the budget the best maximal code found is returned with
// exact == false; it is always maximal, so the covering-argument lower bound
// still applies to whole-space results.
MaxCodeResult max_code(const AlphabetProfile& profile, std::size_t d,
                       Ambient ambient = Ambient::WholeSpace,
                       std::optional<std::size_t> r = std::nullopt,
                       const MaxCodeOptions& options = {});

// max over x in Q of |C \cap B_rho(x)|: the worst-case list size of the code
// at decoding radius rho, by direct ball accumulation.
std::size_t list_size_measure(const AlphabetProfile& profile, const CodeSet& code,
                              std::size_t rho, std::uint64_t max_points = 100000);

} // namespace mixedcodes

#endif
