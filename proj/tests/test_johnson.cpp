#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mixedcodes/errors.hpp"
#include "mixedcodes/johnson.hpp"
#include "mixedcodes/oracle.hpp"
#include "mixedcodes/profile.hpp"

#include <cmath>

using namespace mixedcodes;

TEST_CASE("radius closed values") {
    // q = 2: J(delta) = (1 - sqrt(1 - 2 delta)) / 2.
    CHECK(johnson_radius(2.0, 0.32) == doctest::Approx(0.2).epsilon(1e-12));
    // q = 3: 1 - 3 delta / 2 = 1/4 at delta = 1/2, so J = 1/3.
    CHECK(johnson_radius(3.0, 0.5) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(johnson_radius(7.0, 0.0) == 0.0);
    // The domain is half-open: delta = 1 - 1/q is already outside.
    CHECK_THROWS_AS(johnson_radius(2.0, 0.5), DeltaOutOfRange);
}

TEST_CASE("radius stays between half distance and distance") {
    for (double q : {2.0, 2.5, 4.25, 11.0}) {
        const double beta = 1.0 - 1.0 / q;
        for (int i = 0; i <= 40; ++i) {
            const double delta = beta * double(i) / 41.0;
            const double j = johnson_radius(q, delta);
            CHECK(j >= delta / 2.0 - 1e-12);
            CHECK(j <= delta + 1e-12);
        }
    }
}

TEST_CASE("decoding condition is a monotone radius cutoff") {
    const Rat q(17, 4);
    const std::size_t n = 4;
    const Rat beta = Rat(1) - Rat(4, 17);
    for (std::size_t d = 1; d <= n; ++d) {
        bool seen_false = false;
        for (std::size_t r = 0; r <= n; ++r) {
            const bool cond = johnson_condition(q, r, d, n);
            if (!cond) seen_false = true;
            CHECK_FALSE((cond && seen_false));
        }
        if (Rat(d) < beta * Rat(n)) {
            CHECK(johnson_condition(q, 0, d, n));
        } else {
            // d/n at or past 1 - 1/q: the radius is undefined, nothing passes.
            CHECK_FALSE(johnson_condition(q, 0, d, n));
        }
    }
    // Binary n = 8, d = 3: J(3/8) = 1/4 exactly, so the cutoff is r < 2.
    CHECK(johnson_condition(Rat(2), 1, 3, 8));
    CHECK_FALSE(johnson_condition(Rat(2), 2, 3, 8));
    CHECK_FALSE(johnson_condition(Rat(2), 0, 4, 4));
}

TEST_CASE("radius-limited code bound, frozen values") {
    CHECK(constant_weight_bound(AlphabetProfile({2, 2, 2, 2}), 1, 4) == Rat(8, 5));
    CHECK(constant_weight_bound(AlphabetProfile({2, 3}), 1, 2) == Rat(12, 5));
}

TEST_CASE("radius-limited code bound dominates exhaustive search") {
    for (const AlphabetProfile& p :
         {AlphabetProfile({2, 2, 2, 2}), AlphabetProfile({2, 3, 5}),
          AlphabetProfile({2, 2, 3})}) {
        const std::size_t n = p.length();
        const Rat qa = means(p).arithmetic;
        for (std::size_t d = 2; d <= n; ++d) {
            for (std::size_t r = 1; r <= n; ++r) {
                if (!johnson_condition(qa, r, d, n)) continue;
                const Rat bound = constant_weight_bound(p, r, d);
                const MaxCodeResult best = max_code(p, d, Ambient::Ball, r);
                REQUIRE(best.exact);
                CHECK(Rat(best.code.elements.size()) <= bound);
            }
        }
    }
}

TEST_CASE("list size bound, frozen value") {
    // ceil((q_a - 1) d n) with q_a = 17/4, d = 2, n = 4.
    CHECK(list_size_bound(AlphabetProfile({2, 3, 5, 7}), 2, 0) == Int(26));
}

TEST_CASE("list size bound caps the measured list size") {
    const AlphabetProfile p({2, 3, 5});
    const MaxCodeResult best = max_code(p, 2);
    REQUIRE(best.exact);
    for (std::size_t rho = 0; rho <= 1; ++rho) {
        if (rho > 0 && !johnson_condition(means(p).arithmetic, rho, 2, p.length())) continue;
        const Int bound = list_size_bound(p, 2, rho);
        CHECK(Int(list_size_measure(p, best.code, rho)) <= bound);
    }
}

TEST_CASE("list size bound rejects oversized distances") {
    // d >= (1 - 1/q_a) n leaves no decoding radius.
    CHECK_THROWS_AS(list_size_bound(AlphabetProfile({2, 2}), 2, 0), PreconditionViolated);
}
