#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mixedcodes/errors.hpp"
#include "mixedcodes/exact.hpp"
#include "mixedcodes/oracle.hpp"
#include "mixedcodes/profile.hpp"
#include "mixedcodes/space.hpp"
#include "mixedcodes/spectral.hpp"
#include "mixedcodes/sphere.hpp"

#include <cmath>

using namespace mixedcodes;

TEST_CASE("whole space has eigenvalue equal to the regular degree") {
    const AlphabetProfile p({2, 3});
    const SubsetSpectrum s = ball_spectrum(p, 2);
    CHECK(s.lambda == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(s.subset.size() == 6);
}

TEST_CASE("a single point has eigenvalue zero") {
    const SubsetSpectrum s = ball_spectrum(AlphabetProfile({2, 3}), 0);
    CHECK(std::abs(s.lambda) <= 1e-12);
}

TEST_CASE("path-shaped subsets defeat plain power iteration but not this one") {
    // In 2 x 2, the subset {00, 10, 01} induces a path; its top eigenvalue is
    // sqrt(2). A Rayleigh plateau on the unshifted iteration would report 4/3.
    SpaceIndexer space(AlphabetProfile({2, 2}));
    const SubsetSpectrum s = top_eigenvalue(space, {0, 1, 2});
    CHECK(s.lambda == doctest::Approx(std::sqrt(2.0)).epsilon(1e-8));
}

TEST_CASE("eigenvalue grows with radius and stays within degree") {
    const AlphabetProfile p({2, 2, 2, 2, 2});
    double prev = -1.0;
    for (std::size_t r = 0; r <= 5; ++r) {
        const SubsetSpectrum s = ball_spectrum(p, r);
        CHECK(s.lambda >= prev - 1e-9);
        CHECK(s.lambda >= -1e-9);
        CHECK(s.lambda <= 5.0 + 1e-9);
        prev = s.lambda;
    }
}

TEST_CASE("analytic lower bound sits below the exact eigenvalue") {
    for (std::size_t n : {9, 10}) {
        std::vector<std::uint32_t> sizes(n, 2);
        const AlphabetProfile p(sizes);
        const SphereSizeTable t = sphere_sizes(p);
        const std::size_t r = 4;
        const double formula = ball_eigenvalue_lower_bound(t, r);
        const double rayleigh = annulus_rayleigh(t, r);
        const SubsetSpectrum s = ball_spectrum(p, r);
        CHECK(formula <= rayleigh + 1e-9);
        CHECK(rayleigh <= s.lambda + 1e-9);
        CHECK(formula > 0.0);
    }
}

TEST_CASE("annulus machinery rejects short or shallow balls") {
    CHECK_THROWS_AS(ball_eigenvalue_lower_bound(sphere_sizes(AlphabetProfile({2, 3})), 2),
                    RadiusInapplicable);
    // n = 5: floor(sqrt(5)) = 2 < 3.
    CHECK_THROWS_AS(
        ball_eigenvalue_lower_bound(sphere_sizes(AlphabetProfile({2, 2, 2, 2, 2})), 3),
        RadiusInapplicable);
    // n = 9, r = 3: r^2 = n is not strictly deep enough.
    std::vector<std::uint32_t> nine(9, 2);
    CHECK_THROWS_AS(ball_eigenvalue_lower_bound(sphere_sizes(AlphabetProfile(nine)), 3),
                    RadiusInapplicable);
    CHECK_THROWS_AS(ball_eigenvalue_lower_bound(sphere_sizes(AlphabetProfile(nine)), 10),
                    RadiusOutOfRange);
}

TEST_CASE("certificate at full radius reduces to an exact rational test") {
    const AlphabetProfile p({2, 2, 2, 2});
    // threshold = (n+1) P_1 / n - prefix_sum(3) = 5 - 6 = -1 <= P_1 = 4.
    const EvCertificate cert = bound_by_ev_certificate(p, 3, 4);
    CHECK(cert.fired);
    CHECK(cert.lambda_available);
    CHECK(cert.lambda_is_exact);
    CHECK(cert.lambda == doctest::Approx(4.0));
    CHECK(cert.bound == Int(4) * sphere_sizes(p).ball(4));
}

TEST_CASE("fired certificates dominate the exhaustive optimum") {
    const AlphabetProfile p({2, 2, 2, 2});
    for (std::size_t d = 1; d <= 4; ++d) {
        const MaxCodeResult best = max_code(p, d);
        REQUIRE(best.exact);
        for (std::size_t r = 0; r <= 4; ++r) {
            const EvCertificate cert = bound_by_ev_certificate(p, d, r);
            if (cert.fired) {
                CHECK(Int(best.code.elements.size()) <= cert.bound);
            }
        }
    }
}

TEST_CASE("certificate validates its inputs") {
    const AlphabetProfile p({2, 3});
    CHECK_THROWS_AS(bound_by_ev_certificate(p, 0, 1), DistanceOutOfRange);
    CHECK_THROWS_AS(bound_by_ev_certificate(p, 3, 1), DistanceOutOfRange);
    CHECK_THROWS_AS(bound_by_ev_certificate(p, 1, 3), RadiusOutOfRange);
}

TEST_CASE("eigenfunction is nonnegative, unit, and even on balls") {
    SpaceIndexer space(AlphabetProfile({2, 2, 2, 2, 2}));
    const SubsetSpectrum s = top_eigenvalue(space, ball_indices(space, 2));
    CHECK(s.even_symmetrized);
    double norm = 0.0;
    for (double v : s.eigenfunction) {
        CHECK(v >= 0.0);
        norm += v * v;
    }
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("trend of the analytic bound tracks 2 sqrt((q_a - 1) r (n - r)) + (q_a - 2) r") {
    // Same alphabet recipe at two lengths; ratio to the reference scale stays
    // near 1 as n grows.
    for (std::size_t copies : {25, 100}) {
        std::vector<std::uint32_t> sizes;
        for (std::size_t i = 0; i < copies; ++i) {
            for (std::uint32_t q : {2, 3, 5, 7}) sizes.push_back(q);
        }
        const AlphabetProfile p(sizes);
        const std::size_t n = p.length();
        const std::size_t r = n / 2;
        const double formula = ball_eigenvalue_lower_bound(sphere_sizes(p), r);
        const double qa = 17.0 / 4.0;
        const double reference =
            2.0 * std::sqrt((qa - 1.0) * double(r) * double(n - r)) + (qa - 2.0) * double(r);
        CHECK(formula / reference > 0.7);
        CHECK(formula / reference < 1.3);
    }
}
