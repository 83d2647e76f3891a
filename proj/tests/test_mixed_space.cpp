#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mixedcodes/errors.hpp"
#include "mixedcodes/exact.hpp"
#include "mixedcodes/oracle.hpp"
#include "mixedcodes/profile.hpp"
#include "mixedcodes/space.hpp"
#include "mixedcodes/sphere.hpp"

#include <cmath>
#include <vector>

using namespace mixedcodes;

TEST_CASE("profile sorts sizes and validates input") {
    const AlphabetProfile p({7, 2, 5, 3});
    CHECK(p.length() == 4);
    CHECK(p.size_at(0) == 2);
    CHECK(p.size_at(3) == 7);
    CHECK(p.smallest() == 2);
    CHECK(p.largest() == 7);
    CHECK_THROWS_AS(AlphabetProfile({}), EmptyProfile);
    CHECK_THROWS_AS(AlphabetProfile({2, 1, 3}), AlphabetTooSmall);
}

TEST_CASE("profile products and power sums") {
    const AlphabetProfile p({2, 3, 5, 7});
    CHECK(p.space_size() == Int(210));
    CHECK(p.power_sum(1) == Int(13));          // 1 + 2 + 4 + 6
    CHECK(p.power_sum(2) == Int(57));          // 1 + 4 + 16 + 36
    CHECK(p.power_sum(4) == Int(1569));        // 1 + 16 + 256 + 1296
    CHECK(p.prefix_product(0) == Int(1));
    CHECK(p.prefix_product(3) == Int(30));
    CHECK(p.prefix_sum(2) == 5);
    CHECK(p.prefix_sum(4) == 17);
}

TEST_CASE("means of 2,3,5,7") {
    const AlphabetProfile p({2, 3, 5, 7});
    const MeansSummary m = means(p);
    CHECK(m.arithmetic == Rat(17, 4));
    CHECK(m.reduced_harmonic == Rat(71, 23));
    CHECK(m.geometric == doctest::Approx(std::pow(210.0, 0.25)).epsilon(1e-12));
    CHECK(m.reduced_geometric ==
          doctest::Approx(std::pow(48.0, 0.25) + 1.0).epsilon(1e-12));
    // Ordering: arithmetic >= geometric >= reduced geometric >= reduced harmonic.
    CHECK(rat_as_double(m.arithmetic) >= m.geometric - 1e-12);
    CHECK(m.geometric >= m.reduced_geometric - 1e-12);
    CHECK(m.reduced_geometric >= rat_as_double(m.reduced_harmonic) - 1e-12);
}

TEST_CASE("sphere sizes of 2,3") {
    const SphereSizeTable t = sphere_sizes(AlphabetProfile({2, 3}));
    CHECK(t.sphere(0) == Int(1));
    CHECK(t.sphere(1) == Int(3));
    CHECK(t.sphere(2) == Int(2));
    CHECK(t.ball(1) == Int(4));
    CHECK(t.ball(2) == Int(6));
    CHECK_THROWS_AS(t.sphere(3), RadiusOutOfRange);
}

TEST_CASE("recursion agrees with the generating polynomial") {
    for (const auto& sizes : std::vector<std::vector<std::uint32_t>>{
             {2, 3}, {2, 2, 2}, {3, 4, 5}, {2, 3, 5, 7}, {4, 4, 4, 4, 4}}) {
        const AlphabetProfile p(sizes);
        const SphereSizeTable a = sphere_sizes(p);
        const SphereSizeTable b = sphere_sizes_poly_oracle(p);
        Int total = 0;
        for (std::size_t r = 0; r <= p.length(); ++r) {
            CHECK(a.sphere(r) == b.sphere(r));
            total += a.sphere(r);
        }
        CHECK(total == p.space_size());
    }
}

TEST_CASE("recursion agrees with exhaustive weight counting") {
    for (const auto& sizes : std::vector<std::vector<std::uint32_t>>{
             {2, 3}, {2, 2, 3}, {3, 3, 3}, {2, 3, 4, 5}}) {
        const AlphabetProfile p(sizes);
        const SphereSizeTable t = sphere_sizes(p);
        const auto hist = weight_histogram(p);
        for (std::size_t r = 0; r <= p.length(); ++r) {
            CHECK(t.sphere(r) == Int(hist[r]));
        }
    }
}

TEST_CASE("indexing is little-endian mixed radix") {
    SpaceIndexer space(AlphabetProfile({2, 3}));
    CHECK(space.size() == 6);
    CHECK(space.encode(GroupElement{{1, 2}}) == 5);
    CHECK(space.encode(GroupElement{{0, 1}}) == 2);
    for (std::size_t i = 0; i < space.size(); ++i) {
        CHECK(space.encode(space.decode(i)) == i);
    }
    CHECK(space.weight_of(5) == 2);
    CHECK(space.weight_of(0) == 0);
}

TEST_CASE("group operations invert each other") {
    SpaceIndexer space(AlphabetProfile({2, 3, 5}));
    for (std::size_t x = 0; x < space.size(); x += 3) {
        CHECK(space.add(x, space.negate(x)) == 0);
        for (std::size_t y = 0; y < space.size(); y += 7) {
            CHECK(space.subtract(space.add(x, y), y) == x);
        }
    }
    // negate in 2,3: (1,2) -> (1,1).
    SpaceIndexer small(AlphabetProfile({2, 3}));
    CHECK(small.negate(5) == 3);
}

TEST_CASE("neighbor walk has degree equal to the unit sphere") {
    SpaceIndexer space(AlphabetProfile({2, 3, 4}));
    const SphereSizeTable t = sphere_sizes(space.profile());
    for (std::size_t x = 0; x < space.size(); ++x) {
        std::size_t degree = 0;
        space.for_each_neighbor(x, [&](std::size_t) { ++degree; });
        CHECK(Int(degree) == t.sphere(1));
    }
}

TEST_CASE("sphere and ball index lists match the table") {
    SpaceIndexer space(AlphabetProfile({2, 3, 5}));
    const SphereSizeTable t = sphere_sizes(space.profile());
    for (std::size_t r = 0; r <= 3; ++r) {
        CHECK(Int(sphere_indices(space, r).size()) == t.sphere(r));
        CHECK(Int(ball_indices(space, r).size()) == t.ball(r));
    }
}

TEST_CASE("support-restricted spheres count only the chosen coordinates") {
    SpaceIndexer space(AlphabetProfile({2, 3, 5}));
    const std::vector<std::size_t> support = {0, 2};
    // Full support on {0, 2}: (2-1) * (5-1) points.
    CHECK(sphere_indices(space, 2, support).size() == 4);
    for (std::size_t idx : sphere_indices(space, 2, support)) {
        const GroupElement g = space.decode(idx);
        CHECK(g.coords[0] != 0);
        CHECK(g.coords[1] == 0);
        CHECK(g.coords[2] != 0);
    }
}

TEST_CASE("deleted-coordinate sums collapse to full-profile sphere sizes") {
    const AlphabetProfile p({2, 3});
    const SphereSizeTable t = sphere_sizes(p);
    const SphereSizeTable drop0 = sphere_sizes(AlphabetProfile({3}));
    const SphereSizeTable drop1 = sphere_sizes(AlphabetProfile({2}));
    // r = 0: plain, weighted, and squared-weight versions.
    CHECK(drop0.sphere(0) + drop1.sphere(0) == Int(2) * t.sphere(0));
    CHECK(Int(1) * drop0.sphere(0) + Int(2) * drop1.sphere(0) == Int(1) * t.sphere(1));
    CHECK(Int(1) * drop0.sphere(0) + Int(4) * drop1.sphere(0) ==
          p.power_sum(1) * t.sphere(1) - Int(2) * t.sphere(2));
    // r = 1: weighted identity gives 2 s_2.
    CHECK(Int(1) * drop0.sphere(1) + Int(2) * drop1.sphere(1) == Int(2) * t.sphere(2));
}

TEST_CASE("ball entropy bracket contains the true ball size") {
    const AlphabetProfile p({2, 3, 4, 5, 6, 7});
    const SphereSizeTable t = sphere_sizes(p);
    for (std::size_t r = 1; r <= 3; ++r) {
        const BallEntropyBounds b = ball_entropy_bounds(p, r);
        const double log_ball = log_int(t.ball(r));
        CHECK(log_ball <= b.log_upper + 1e-9 * std::max(1.0, std::abs(log_ball)));
        if (b.has_lower) {
            CHECK(b.log_lower <= log_ball + 1e-9 * std::max(1.0, std::abs(log_ball)));
        }
    }
}

TEST_CASE("normalized root report is diagnostic only") {
    const NormalizedRootReport report =
        normalized_root_report(sphere_sizes(AlphabetProfile({2, 3, 5, 7})));
    CHECK(report.values.size() == 4);
    for (const auto& [r, value] : report.values) {
        CHECK(value > 0.0);
        CHECK(r >= 1);
    }
}

TEST_CASE("binomial and exact helpers") {
    CHECK(binomial(10, 5) == Int(252));
    CHECK(binomial(400, 200) > Int(1) << 395);
    CHECK(binomial(400, 200) < Int(1) << 396);
    CHECK(log_int(Int(1)) == 0.0);
    CHECK(ratio_as_double(Int(3), Int(2)) == doctest::Approx(1.5));
    CHECK(rat_as_double(Rat(7, 4)) == doctest::Approx(1.75));
    CHECK(pow_rat(Rat(3, 2), 3) == Rat(27, 8));
}
