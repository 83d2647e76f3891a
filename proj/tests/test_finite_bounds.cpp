#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mixedcodes/errors.hpp"
#include "mixedcodes/finite_bounds.hpp"
#include "mixedcodes/johnson.hpp"
#include "mixedcodes/oracle.hpp"
#include "mixedcodes/profile.hpp"
#include "mixedcodes/sphere.hpp"

using namespace mixedcodes;

TEST_CASE("covering, packing and projection bounds, frozen values") {
    const AlphabetProfile p23({2, 3});
    CHECK(gv_lower(p23, 2) == Int(2));           // ceil(6 / 4)
    CHECK(sphere_packing_upper(p23, 2) == Int(6)); // floor(6 / 1), t = 0
    CHECK(singleton_upper(p23, 2) == Int(2));

    const AlphabetProfile p2357({2, 3, 5, 7});
    CHECK(singleton_upper(p2357, 4) == Int(2));
    CHECK(singleton_upper(p2357, 1) == Int(210));
    CHECK(gv_lower(p2357, 1) == Int(210));
    CHECK(sphere_packing_upper(p2357, 1) == Int(210));
    CHECK(sphere_packing_upper(p2357, 3) == Int(15)); // floor(210 / 14)
}

TEST_CASE("distance validation") {
    const AlphabetProfile p({2, 3});
    CHECK_THROWS_AS(gv_lower(p, 0), DistanceOutOfRange);
    CHECK_THROWS_AS(gv_lower(p, 3), DistanceOutOfRange);
    CHECK_THROWS_AS(sphere_packing_upper(p, 0), DistanceOutOfRange);
    CHECK_THROWS_AS(singleton_upper(p, 3), DistanceOutOfRange);
}

TEST_CASE("pigeonhole transfer, frozen value") {
    const SphereSizeTable t = sphere_sizes(AlphabetProfile({2, 3}));
    // (|Q| / s_1) * (12/5) = (6/3) * (12/5) = 24/5.
    CHECK(pigeonhole_transfer(t, 1, Rat(12, 5)) == Rat(24, 5));
    CHECK_THROWS_AS(pigeonhole_transfer(t, 3, Rat(1)), RadiusOutOfRange);
    CHECK_THROWS_AS(pigeonhole_transfer(t, 1, Rat(-1)), ArgOutOfRange);
}

TEST_CASE("averaging upper bound on the binary 8-cube, frozen value") {
    const AlphabetProfile p({2, 2, 2, 2, 2, 2, 2, 2});
    const EbBound eb = elias_bassalygo_upper(p, 3);
    REQUIRE(eb.applicable);
    CHECK(eb.radius == 1);
    CHECK(eb.value == Rat(384, 5)); // (256 / 8) * (12 / 5)
    // Must dominate the true optimum A(8,3) = 20.
    CHECK(eb.value >= Rat(20));
}

TEST_CASE("averaging upper bound inapplicability") {
    // d too large relative to (1 - 1/q_a) n: the reduction throws.
    CHECK_THROWS_AS(elias_bassalygo_upper(AlphabetProfile({2, 3}), 2), NotApplicable);
    // Within range but no radius passes the decoding condition.
    const EbBound eb = elias_bassalygo_upper(AlphabetProfile({2, 3}), 1);
    CHECK_FALSE(eb.applicable);
}

TEST_CASE("bound collection composes the four bounds") {
    const AlphabetProfile p({2, 3, 5, 7});
    const auto bounds = all_finite_bounds(p, 2);
    REQUIRE(bounds.size() == 4);
    CHECK(bounds[0].kind == FiniteBoundKind::GilbertVarshamovLower);
    CHECK_FALSE(bounds[0].is_upper);
    CHECK(bounds[1].kind == FiniteBoundKind::SpherePackingUpper);
    CHECK(bounds[2].kind == FiniteBoundKind::SingletonUpper);
    CHECK(bounds[3].kind == FiniteBoundKind::EliasBassalygoUpper);
    for (std::size_t i = 1; i < 4; ++i) CHECK(bounds[i].is_upper);
    if (bounds[3].applicable) {
        REQUIRE(bounds[3].radius.has_value());
        const SphereSizeTable t = sphere_sizes(p);
        CHECK(bounds[3].value ==
              pigeonhole_transfer(t, *bounds[3].radius,
                                  constant_weight_bound(p, *bounds[3].radius, 2)));
    }
    const Rat least = min_upper_bound(bounds);
    for (const BoundResult& b : bounds) {
        if (b.is_upper && b.applicable) CHECK(least <= b.value);
    }
    CHECK(Rat(gv_lower(p, 2)) <= least);
}

TEST_CASE("sandwich against exhaustive search on small spaces") {
    for (const AlphabetProfile& p :
         {AlphabetProfile({2, 3}), AlphabetProfile({2, 2, 3}), AlphabetProfile({3, 3, 3}),
          AlphabetProfile({2, 3, 5})}) {
        for (std::size_t d = 1; d <= p.length(); ++d) {
            const MaxCodeResult best = max_code(p, d);
            REQUIRE(best.exact);
            const Int size(best.code.elements.size());
            CHECK(gv_lower(p, d) <= size);
            CHECK(Rat(size) <= min_upper_bound(all_finite_bounds(p, d)));
        }
    }
}
