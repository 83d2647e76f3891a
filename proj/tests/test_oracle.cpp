#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mixedcodes/errors.hpp"
#include "mixedcodes/finite_bounds.hpp"
#include "mixedcodes/oracle.hpp"
#include "mixedcodes/profile.hpp"
#include "mixedcodes/space.hpp"
#include "mixedcodes/sphere.hpp"

#include <set>

using namespace mixedcodes;

TEST_CASE("distance-1 codes fill the space") {
    const AlphabetProfile p({2, 3, 5});
    const MaxCodeResult best = max_code(p, 1);
    CHECK(best.exact);
    CHECK(best.code.elements.size() == 30);
    CHECK(best.code.min_distance == 1);
}

TEST_CASE("optimum sizes on small mixed spaces") {
    // d = 2 admits exactly |Q| / q_max via a check-digit construction.
    CHECK(max_code(AlphabetProfile({2, 3}), 2).code.elements.size() == 2);
    CHECK(max_code(AlphabetProfile({2, 2, 3}), 2).code.elements.size() == 4);
    CHECK(max_code(AlphabetProfile({3, 3, 3}), 2).code.elements.size() == 9);
    // Full distance admits exactly min q.
    CHECK(max_code(AlphabetProfile({2, 3}), 2).exact);
    CHECK(max_code(AlphabetProfile({2, 3, 5}), 3).code.elements.size() == 2);
    CHECK(max_code(AlphabetProfile({3, 4, 5}), 3).code.elements.size() == 3);
    // Binary even-weight code at d = 2.
    CHECK(max_code(AlphabetProfile({2, 2, 2, 2}), 2).code.elements.size() == 8);
    // Classical binary values: A(4,3) = 2, A(5,3) = 4.
    CHECK(max_code(AlphabetProfile({2, 2, 2, 2}), 3).code.elements.size() == 2);
    CHECK(max_code(AlphabetProfile({2, 2, 2, 2, 2}), 3).code.elements.size() == 4);
}

TEST_CASE("resulting codes respect their declared minimum distance") {
    SpaceIndexer space(AlphabetProfile({2, 3, 4}));
    for (std::size_t d = 1; d <= 3; ++d) {
        const MaxCodeResult best = max_code(space.profile(), d);
        REQUIRE(best.exact);
        CHECK(best.code.min_distance >= d);
        // Recompute pairwise distances directly.
        std::size_t observed = space.profile().length() + 1;
        const auto& els = best.code.elements;
        for (std::size_t i = 0; i < els.size(); ++i) {
            for (std::size_t j = i + 1; j < els.size(); ++j) {
                observed = std::min(observed, space.weight_of(space.subtract(els[i], els[j])));
            }
        }
        if (els.size() > 1) CHECK(observed == best.code.min_distance);
    }
}

TEST_CASE("ambient restrictions honor sphere and ball membership") {
    const AlphabetProfile p({2, 2, 2, 2});
    SpaceIndexer space(p);

    const MaxCodeResult ball = max_code(p, 4, Ambient::Ball, 1);
    CHECK(ball.exact);
    CHECK(ball.code.elements.size() == 1);

    const MaxCodeResult sphere = max_code(p, 2, Ambient::Sphere, 2);
    CHECK(sphere.exact);
    CHECK(sphere.code.elements.size() == 6);
    for (std::size_t e : sphere.code.elements) {
        CHECK(space.weight_of(e) == 2);
    }
}

TEST_CASE("sphere enumeration matches the counting table") {
    const AlphabetProfile p({2, 3, 5});
    const SphereSizeTable t = sphere_sizes(p);
    for (std::size_t r = 0; r <= 3; ++r) {
        const auto pts = enumerate_sphere(p, r);
        CHECK(Int(pts.size()) == t.sphere(r));
        const std::set<std::vector<std::uint32_t>> unique(
            [&] {
                std::set<std::vector<std::uint32_t>> s;
                for (const GroupElement& g : pts) s.insert(g.coords);
                return s;
            }());
        CHECK(unique.size() == pts.size());
    }
}

TEST_CASE("weight histogram equals the sphere table") {
    const AlphabetProfile p({2, 3, 5, 7});
    const auto hist = weight_histogram(p);
    const SphereSizeTable t = sphere_sizes(p);
    REQUIRE(hist.size() == 5);
    for (std::size_t r = 0; r <= 4; ++r) {
        CHECK(Int(hist[r]) == t.sphere(r));
    }
}

TEST_CASE("zero budget degrades to a maximal greedy code") {
    const AlphabetProfile p({2, 3, 5});
    MaxCodeOptions opts;
    opts.budget_seconds = 0.0;
    const MaxCodeResult greedy = max_code(p, 2, Ambient::WholeSpace, std::nullopt, opts);
    CHECK_FALSE(greedy.exact);
    CHECK(greedy.code.min_distance >= 2);
    // Maximality makes the greedy code at least the covering bound.
    CHECK(gv_lower(p, 2) <= Int(greedy.code.elements.size()));
    // And it can never beat the true optimum.
    const MaxCodeResult best = max_code(p, 2);
    REQUIRE(best.exact);
    CHECK(greedy.code.elements.size() <= best.code.elements.size());
}

TEST_CASE("tiny exact cap also degrades") {
    const AlphabetProfile p({2, 3, 5});
    MaxCodeOptions opts;
    opts.exact_cap = 10;
    const MaxCodeResult r = max_code(p, 2, Ambient::WholeSpace, std::nullopt, opts);
    CHECK_FALSE(r.exact);
    CHECK(r.code.min_distance >= 2);
}

TEST_CASE("code sets compute their minimum distance") {
    SpaceIndexer space(AlphabetProfile({2, 3}));
    const CodeSet code = make_code_set(space, {0, 5});
    CHECK(code.min_distance == 2);
    const CodeSet single = make_code_set(space, {4});
    CHECK(single.min_distance == 3); // n + 1 convention for degenerate codes
    const CodeSet empty = make_code_set(space, {});
    CHECK(empty.min_distance == 3);
}

TEST_CASE("list size measure counts the densest decoding ball") {
    const AlphabetProfile p({2, 3});
    SpaceIndexer space(p);
    std::vector<std::size_t> all(space.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    const CodeSet everything = make_code_set(space, all);
    CHECK(list_size_measure(p, everything, 0) == 1);
    CHECK(list_size_measure(p, everything, 1) == 4);  // |B_1|
    CHECK(list_size_measure(p, everything, 2) == 6);

    // (1,0) lies at distance 1 from both (0,0) and (1,2).
    const CodeSet pair = make_code_set(space, {0, 5});
    CHECK(list_size_measure(p, pair, 1) == 2);
    CHECK(list_size_measure(p, pair, 0) == 1);
}
