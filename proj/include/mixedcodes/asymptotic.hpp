#ifndef MIXEDCODES_ASYMPTOTIC_HPP
#define MIXEDCODES_ASYMPTOTIC_HPP

#include "mixedcodes/distribution.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace mixedcodes {

// Leading-order bounds on the achievable rate R = log |C| / log |Q| as a
// function of the relative distance delta, for a fixed alphabet composition.
// Vanishing terms are dropped throughout; every rate is clamped to [0, 1].
// Conventions: q_a arithmetic mean, q_g geometric, q_rg reduced geometric.

// Achievability: R >= 1 - (log q_a / log q_g) H_{q_a}(delta),
// for 0 <= delta <= 1 - 1/q_a (DeltaOutOfRange beyond).
double gv_rate(const AlphabetDistribution& dist, double delta);

// Packing converse: R <= 1 - (log q_rg / log q_g) H_{q_rg}(delta / 2),
// same delta range.
double sp_rate(const AlphabetDistribution& dist, double delta);

// Both at once (they share the range checks).
std::pair<double, double> gv_sp_rates(const AlphabetDistribution& dist, double delta);

// Confinement converse: R <= 1 - (log q_rg / log q_g) H_{q_rg}(J_{q_a}(delta))
// for 0 <= delta < 1 - 1/q_a. The entropy step needs J_{q_a}(delta) on the
// increasing branch of H_{q_rg}; EntropyArgOutOfRange is thrown when
// J_{q_a}(delta) > 1 - 1/q_rg (possible for strongly mixed compositions).
double eb_rate(const AlphabetDistribution& dist, double delta);

// Spectral converse: with the penalty term
//   dd = partial_size_mean(delta) / q_a
// (the delta-fraction of smallest alphabets, averaged), valid for
// dd <= 1 - 1/q_a (DeltaOutOfRange beyond),
//   rho = (1/q_a) ((q_a - 1) - (q_a - 2) dd - 2 sqrt((q_a - 1) dd (1 - dd))),
//   R <= (log q_a / log q_g) H_{q_a}(rho).
double lp_rate(const AlphabetDistribution& dist, double delta);

// Projection converse: R <= partial_log_mean(1 - delta) / log q_g,
// for 0 <= delta <= 1.
double singleton_rate(const AlphabetDistribution& dist, double delta);

enum class CurveKind {
    GilbertVarshamov,
    SpherePacking,
    EliasBassalygo,
    LinearProgramming,
    Singleton,
};

struct RatePoint {
    double delta = 0.0;
    std::optional<double> rate;   // absent when the kind is inapplicable here
    bool exhausted = false;       // true when a negative value was clamped to 0
};

struct RateCurve {
    CurveKind kind = CurveKind::GilbertVarshamov;
    std::vector<RatePoint> samples;
};

// Evaluates one bound over a strictly increasing grid in [0, 1]. Per-sample
// range errors become absent points; they never abort the curve. Threads > 1
// splits the grid across workers; the result is identical either way.
RateCurve rate_curve(const AlphabetDistribution& dist, CurveKind kind,
                     const std::vector<double>& grid, unsigned threads = 1);

// 0, step, 2 step, ..., 1 (the last point clamped to exactly 1).
std::vector<double> uniform_grid(double step);

} // namespace mixedcodes

#endif
