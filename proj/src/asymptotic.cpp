#include "mixedcodes/asymptotic.hpp"

#include "mixedcodes/entropy.hpp"
#include "mixedcodes/errors.hpp"
#include "mixedcodes/johnson.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace mixedcodes {

namespace {

struct RateValue {
    double rate = 0.0;
    bool exhausted = false;
};

RateValue clamp_rate(double raw) {
    if (raw < 0.0) return {0.0, true};
    if (raw > 1.0) return {1.0, false};
    return {raw, false};
}

void check_delta_upto(double delta, double limit, const char* who) {
    if (!(delta >= 0.0 && delta <= limit))
        throw DeltaOutOfRange(std::string(who) + ": delta outside the applicable range");
}

RateValue gv_value(const AlphabetDistribution& dist, double delta) {
    const double q_a = rat_as_double(dist.arithmetic_mean());
    const double q_g = dist.geometric_mean();
    check_delta_upto(delta, 1.0 - 1.0 / q_a, "gv_rate");
    return clamp_rate(1.0 - std::log(q_a) / std::log(q_g) * entropy(q_a, delta));
}

RateValue sp_value(const AlphabetDistribution& dist, double delta) {
    const double q_a = rat_as_double(dist.arithmetic_mean());
    const double q_rg = dist.reduced_geometric_mean();
    const double q_g = dist.geometric_mean();
    check_delta_upto(delta, 1.0 - 1.0 / q_a, "sp_rate");
    return clamp_rate(1.0 - std::log(q_rg) / std::log(q_g) * entropy(q_rg, delta / 2.0));
}

RateValue eb_value(const AlphabetDistribution& dist, double delta) {
    const double q_a = rat_as_double(dist.arithmetic_mean());
    const double q_rg = dist.reduced_geometric_mean();
    const double q_g = dist.geometric_mean();
    if (!(delta >= 0.0 && delta < 1.0 - 1.0 / q_a))
        throw DeltaOutOfRange("eb_rate: delta outside [0, 1 - 1/q_a)");
    const double radius = johnson_radius(q_a, delta);
    // The entropy comparison is only monotone on [0, 1 - 1/q_rg].
    if (radius > 1.0 - 1.0 / q_rg)
        throw EntropyArgOutOfRange("eb_rate: critical radius beyond 1 - 1/q_rg");
    return clamp_rate(1.0 - std::log(q_rg) / std::log(q_g) * entropy(q_rg, radius));
}

RateValue lp_value(const AlphabetDistribution& dist, double delta) {
    if (!(delta >= 0.0 && delta <= 1.0))
        throw DeltaOutOfRange("lp_rate: delta outside [0, 1]");
    const double q_a = rat_as_double(dist.arithmetic_mean());
    const double q_g = dist.geometric_mean();
    const double dd = dist.partial_size_mean(delta) / q_a;
    const double beta = 1.0 - 1.0 / q_a;
    if (dd > beta * (1.0 + 1e-14))
        throw DeltaOutOfRange("lp_rate: averaged distance beyond (q_a - 1)/q_a");
    const double dd_clamped = std::min(dd, beta);
    double rho = ((q_a - 1.0) - (q_a - 2.0) * dd_clamped -
                  2.0 * std::sqrt((q_a - 1.0) * dd_clamped * (1.0 - dd_clamped))) /
                 q_a;
    // rho >= 0 analytically on this range; trim float slop only.
    rho = std::clamp(rho, 0.0, beta);
    return clamp_rate(std::log(q_a) / std::log(q_g) * entropy(q_a, rho));
}

RateValue singleton_value(const AlphabetDistribution& dist, double delta) {
    if (!(delta >= 0.0 && delta <= 1.0))
        throw DeltaOutOfRange("singleton_rate: delta outside [0, 1]");
    const double q_g = dist.geometric_mean();
    return clamp_rate(dist.partial_log_mean(1.0 - delta) / std::log(q_g));
}

RateValue evaluate(const AlphabetDistribution& dist, CurveKind kind, double delta) {
    switch (kind) {
        case CurveKind::GilbertVarshamov: return gv_value(dist, delta);
        case CurveKind::SpherePacking: return sp_value(dist, delta);
        case CurveKind::EliasBassalygo: return eb_value(dist, delta);
        case CurveKind::LinearProgramming: return lp_value(dist, delta);
        case CurveKind::Singleton: return singleton_value(dist, delta);
    }
    throw ArgOutOfRange("evaluate: unknown curve kind");
}

} // namespace

double gv_rate(const AlphabetDistribution& dist, double delta) {
    return gv_value(dist, delta).rate;
}

double sp_rate(const AlphabetDistribution& dist, double delta) {
    return sp_value(dist, delta).rate;
}

std::pair<double, double> gv_sp_rates(const AlphabetDistribution& dist, double delta) {
    return {gv_value(dist, delta).rate, sp_value(dist, delta).rate};
}

double eb_rate(const AlphabetDistribution& dist, double delta) {
    return eb_value(dist, delta).rate;
}

double lp_rate(const AlphabetDistribution& dist, double delta) {
    return lp_value(dist, delta).rate;
}

double singleton_rate(const AlphabetDistribution& dist, double delta) {
    return singleton_value(dist, delta).rate;
}

RateCurve rate_curve(const AlphabetDistribution& dist, CurveKind kind,
                     const std::vector<double>& grid, unsigned threads) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!(grid[i] >= 0.0 && grid[i] <= 1.0))
            throw InvalidGrid("rate_curve: grid points must lie in [0, 1]");
        if (i > 0 && !(grid[i] > grid[i - 1]))
            throw InvalidGrid("rate_curve: grid must be strictly increasing");
    }
    RateCurve curve;
    curve.kind = kind;
    curve.samples.resize(grid.size());

    auto eval_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            RatePoint point;
            point.delta = grid[i];
            try {
                const RateValue value = evaluate(dist, kind, grid[i]);
                point.rate = value.rate;
                point.exhausted = value.exhausted;
            } catch (const Error&) {
                // Inapplicable at this delta: keep the point absent.
            }
            curve.samples[i] = point;
        }
    };

    const unsigned workers =
        std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(grid.size())));
    if (workers <= 1) {
        eval_range(0, grid.size());
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (grid.size() + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(grid.size(), begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(eval_range, begin, end);
        }
        for (std::thread& t : pool) t.join();
    }
    return curve;
}

std::vector<double> uniform_grid(double step) {
    if (!(step > 0.0 && step <= 1.0)) throw InvalidGrid("uniform_grid: step must lie in (0, 1]");
    std::vector<double> grid;
    const std::size_t count = static_cast<std::size_t>(std::ceil(1.0 / step - 1e-9));
    for (std::size_t k = 0; k <= count; ++k) {
        const double delta = static_cast<double>(k) * step;
        grid.push_back(std::min(delta, 1.0));
    }
    if (grid.back() < 1.0) grid.push_back(1.0);
    return grid;
}

} // namespace mixedcodes
