#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mixedcodes/asymptotic.hpp"
#include "mixedcodes/distribution.hpp"
#include "mixedcodes/entropy.hpp"
#include "mixedcodes/errors.hpp"
#include "mixedcodes/johnson.hpp"

#include <cmath>

using namespace mixedcodes;

TEST_CASE("entropy basics") {
    CHECK(entropy(2.0, 0.0) == 0.0);
    CHECK(entropy(2.0, 0.5) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(entropy(2.0, 0.2) == doctest::Approx(0.7219280948873623).epsilon(1e-12));
    // Maximum at 1 - 1/q; symmetric around it for q = 2.
    CHECK(entropy(4.0, 0.75) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(entropy(2.0, 0.6) == doctest::Approx(entropy(2.0, 0.4)).epsilon(1e-12));
    CHECK_THROWS_AS(entropy(2.0, 1.5), ArgOutOfRange);
    CHECK_THROWS_AS(entropy(1.0, 0.5), ArgOutOfRange);
}

TEST_CASE("binary rates collapse to the classical closed forms") {
    const AlphabetDistribution binary = AlphabetDistribution::mono(2);
    for (double delta : {0.05, 0.1, 0.25, 0.4}) {
        CHECK(gv_rate(binary, delta) ==
              doctest::Approx(1.0 - entropy(2.0, delta)).epsilon(1e-12));
        CHECK(sp_rate(binary, delta) ==
              doctest::Approx(1.0 - entropy(2.0, delta / 2.0)).epsilon(1e-12));
        CHECK(eb_rate(binary, delta) ==
              doctest::Approx(1.0 - entropy(2.0, johnson_radius(2.0, delta))).epsilon(1e-12));
        CHECK(lp_rate(binary, delta) ==
              doctest::Approx(entropy(2.0, 0.5 - std::sqrt(delta * (1.0 - delta))))
                  .epsilon(1e-12));
        CHECK(singleton_rate(binary, delta) == doctest::Approx(1.0 - delta).epsilon(1e-12));
    }
    // Frozen spot value: the linear-programming rate at delta = 0.1.
    CHECK(lp_rate(binary, 0.1) == doctest::Approx(0.7219280948873623).epsilon(1e-9));
}

TEST_CASE("distribution means") {
    const AlphabetDistribution quarters({{2, Rat(1, 4)}, {3, Rat(1, 4)},
                                         {5, Rat(1, 4)}, {7, Rat(1, 4)}});
    CHECK(quarters.arithmetic_mean() == Rat(17, 4));
    CHECK(quarters.reduced_harmonic_mean() == Rat(71, 23));
    CHECK(quarters.geometric_mean() == doctest::Approx(std::pow(210.0, 0.25)).epsilon(1e-12));
}

TEST_CASE("distribution validation") {
    CHECK_THROWS_AS(AlphabetDistribution({{2, Rat(1, 2)}, {3, Rat(1, 3)}}),
                    InvalidDistribution);
    CHECK_THROWS_AS(AlphabetDistribution({{1, Rat(1)}}), AlphabetTooSmall);
    CHECK_THROWS_AS(AlphabetDistribution({}), InvalidDistribution);
}

TEST_CASE("instantiation uses largest remainders, ties to smaller alphabets") {
    const AlphabetDistribution d({{2, Rat(1, 4)}, {3, Rat(3, 4)}});
    const AlphabetProfile p5 = d.instantiate(5);
    CHECK(p5.sizes() == std::vector<std::uint32_t>{2, 3, 3, 3, 3});
    const AlphabetProfile p4 = d.instantiate(4);
    CHECK(p4.sizes() == std::vector<std::uint32_t>{2, 3, 3, 3});

    const AlphabetDistribution even({{2, Rat(1, 2)}, {3, Rat(1, 2)}});
    CHECK(even.instantiate(3).sizes() == std::vector<std::uint32_t>{2, 2, 3});
}

TEST_CASE("partial means ramp with coverage") {
    const AlphabetDistribution d({{2, Rat(1, 2)}, {4, Rat(1, 2)}});
    CHECK(d.partial_size_mean(0.0) == 0.0);
    CHECK(d.partial_size_mean(0.5) == doctest::Approx(1.0));      // only the 2s
    CHECK(d.partial_size_mean(1.0) == doctest::Approx(3.0));      // plus the 4s
    CHECK(d.partial_log_mean(1.0) ==
          doctest::Approx(0.5 * std::log(2.0) + 0.5 * std::log(4.0)));
}

TEST_CASE("text parsing") {
    const AlphabetDistribution a = parse_distribution("2:1/4,3:0.75");
    CHECK(a.arithmetic_mean() == Rat(11, 4));
    CHECK_THROWS_AS(parse_distribution("2:1/4"), InvalidDistribution);
    CHECK_THROWS_AS(parse_distribution("2:x"), InvalidDistribution);
    CHECK(parse_profile("7,2,3").sizes() == std::vector<std::uint32_t>{2, 3, 7});
    CHECK_THROWS_AS(parse_profile("2,one"), InvalidDistribution);
}

TEST_CASE("uniform grid endpoints") {
    const std::vector<double> g = uniform_grid(0.25);
    REQUIRE(g.size() == 5);
    CHECK(g.front() == 0.0);
    CHECK(g.back() == 1.0);
    const std::vector<double> fine = uniform_grid(0.005);
    CHECK(fine.size() == 201);
    CHECK_THROWS_AS(uniform_grid(0.0), InvalidGrid);
}

TEST_CASE("curves mark out-of-range points absent and agree across threads") {
    const AlphabetDistribution binary = AlphabetDistribution::mono(2);
    const std::vector<double> grid = {0.0, 0.25, 0.5, 0.75, 1.0};
    const RateCurve gv = rate_curve(binary, CurveKind::GilbertVarshamov, grid);
    REQUIRE(gv.samples.size() == 5);
    CHECK(gv.samples[0].rate.has_value());
    CHECK(*gv.samples[0].rate == doctest::Approx(1.0));
    CHECK(gv.samples[2].rate.has_value()); // delta = 1/2 is the domain edge
    CHECK_FALSE(gv.samples[3].rate.has_value());
    CHECK_FALSE(gv.samples[4].rate.has_value());

    const RateCurve threaded = rate_curve(binary, CurveKind::GilbertVarshamov, grid, 4);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(threaded.samples[i].rate.has_value() == gv.samples[i].rate.has_value());
        if (gv.samples[i].rate) CHECK(*threaded.samples[i].rate == *gv.samples[i].rate);
    }
}

TEST_CASE("singleton curve spans the whole interval") {
    const AlphabetDistribution d({{2, Rat(1, 4)}, {3, Rat(1, 4)},
                                  {5, Rat(1, 4)}, {7, Rat(1, 4)}});
    const RateCurve curve = rate_curve(d, CurveKind::Singleton, uniform_grid(0.1));
    for (const RatePoint& p : curve.samples) {
        REQUIRE(p.rate.has_value());
        CHECK(*p.rate >= 0.0);
        CHECK(*p.rate <= 1.0);
    }
    CHECK(*curve.samples.front().rate == doctest::Approx(1.0));
    CHECK(*curve.samples.back().rate == doctest::Approx(0.0));
}
