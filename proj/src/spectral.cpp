#include "mixedcodes/spectral.hpp"

#include "mixedcodes/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

namespace mixedcodes {

namespace {

constexpr double kRayleighTol = 1e-12;
constexpr double kResidualTol = 1e-9;
constexpr std::size_t kMaxIterations = 100000;

std::size_t floor_sqrt(std::size_t n) {
    auto m = std::size_t(std::sqrt(double(n)));
    while (m > 0 && m * m > n) --m;
    while ((m + 1) * (m + 1) <= n) ++m;
    return m;
}

// Adjacency rows of the induced subgraph, in local (subset-position) indices.
std::vector<std::vector<std::uint32_t>> induced_adjacency(const SpaceIndexer& space,
                                                          const std::vector<std::size_t>& subset) {
    std::vector<std::vector<std::uint32_t>> rows(subset.size());
    for (std::size_t v = 0; v < subset.size(); ++v) {
        space.for_each_neighbor(subset[v], [&](std::size_t y) {
            const auto it = std::lower_bound(subset.begin(), subset.end(), y);
            if (it != subset.end() && *it == y) {
                rows[v].push_back(std::uint32_t(it - subset.begin()));
            }
        });
    }
    return rows;
}

struct IterationOutcome {
    bool converged = false;
    double lambda = 0.0;
    std::vector<double> vec;
    std::size_t iterations = 0;
};

// Power iteration on A + shift*I. negate_pos, when nonempty, maps each local
// index to the local index of its negated element; iterates are averaged over
// that involution, which commutes with A, so only rounding drift is removed.
IterationOutcome run_power_iteration(const std::vector<std::vector<std::uint32_t>>& rows,
                                     double shift, const std::vector<std::uint32_t>& negate_pos) {
    const std::size_t m = rows.size();
    IterationOutcome out;
    out.vec.assign(m, 1.0 / std::sqrt(double(m)));
    std::vector<double> next(m);
    double prev_rayleigh = 0.0;
    bool have_prev = false;

    for (std::size_t it = 1; it <= kMaxIterations; ++it) {
        out.iterations = it;
        for (std::size_t v = 0; v < m; ++v) {
            double acc = shift * out.vec[v];
            for (std::uint32_t u : rows[v]) acc += out.vec[u];
            next[v] = acc;
        }
        if (!negate_pos.empty()) {
            for (std::size_t v = 0; v < m; ++v) {
                if (negate_pos[v] > v) {
                    const double avg = 0.5 * (next[v] + next[negate_pos[v]]);
                    next[v] = avg;
                    next[negate_pos[v]] = avg;
                }
            }
        }

        // out.vec is unit norm, so x . (A + shift)x is the Rayleigh quotient.
        double rayleigh = 0.0;
        for (std::size_t v = 0; v < m; ++v) rayleigh += out.vec[v] * next[v];
        double residual_sq = 0.0;
        for (std::size_t v = 0; v < m; ++v) {
            const double diff = next[v] - rayleigh * out.vec[v];
            residual_sq += diff * diff;
        }
        const double residual = std::sqrt(residual_sq);
        if (have_prev && std::abs(rayleigh - prev_rayleigh) < kRayleighTol &&
            residual <= kResidualTol * std::max(1.0, std::abs(rayleigh))) {
            out.converged = true;
            out.lambda = rayleigh - shift;
            return out;
        }
        prev_rayleigh = rayleigh;
        have_prev = true;

        double norm_sq = 0.0;
        for (double v : next) norm_sq += v * v;
        const double norm = std::sqrt(norm_sq);
        if (norm == 0.0) {
            // Only reachable on an edgeless subgraph with no shift: the start
            // vector already lies in the kernel, so lambda = 0 exactly.
            out.converged = true;
            out.lambda = -shift;
            return out;
        }
        for (std::size_t v = 0; v < m; ++v) out.vec[v] = next[v] / norm;
    }
    return out;
}

} // namespace

SubsetSpectrum top_eigenvalue(const SpaceIndexer& space, std::vector<std::size_t> subset) {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    if (subset.empty()) throw EmptySubset("eigenvalue of an empty subset");
    if (subset.back() >= space.size()) {
        throw IndexOutOfRange("subset index outside the space");
    }

    const auto rows = induced_adjacency(space, subset);

    std::vector<std::uint32_t> negate_pos(subset.size());
    bool negation_closed = true;
    for (std::size_t v = 0; v < subset.size() && negation_closed; ++v) {
        const std::size_t neg = space.negate(subset[v]);
        const auto it = std::lower_bound(subset.begin(), subset.end(), neg);
        if (it == subset.end() || *it != neg) {
            negation_closed = false;
        } else {
            negate_pos[v] = std::uint32_t(it - subset.begin());
        }
    }
    if (!negation_closed) negate_pos.clear();

    SubsetSpectrum result;
    result.even_symmetrized = negation_closed;

    IterationOutcome outcome = run_power_iteration(rows, 0.0, negate_pos);
    if (!outcome.converged) {
        std::size_t max_degree = 0;
        for (const auto& row : rows) max_degree = std::max(max_degree, row.size());
        outcome = run_power_iteration(rows, double(max_degree), negate_pos);
        result.shifted_retry = true;
        if (!outcome.converged) {
            throw NoConvergence("power iteration did not settle, even shifted");
        }
    }

    result.lambda = outcome.lambda;
    result.iterations = outcome.iterations;
    result.eigenfunction = std::move(outcome.vec);
    // The Perron eigenfunction is nonnegative up to global sign and rounding.
    double total = 0.0;
    for (double v : result.eigenfunction) total += v;
    if (total < 0.0) {
        for (double& v : result.eigenfunction) v = -v;
    }
    for (double& v : result.eigenfunction) v = std::max(0.0, v);
    result.subset = std::move(subset);
    return result;
}

SubsetSpectrum ball_spectrum(const AlphabetProfile& profile, std::size_t r) {
    SpaceIndexer space(profile);
    return top_eigenvalue(space, ball_indices(space, r));
}

namespace {

void check_annulus_applicable(const SphereSizeTable& table, std::size_t r, std::size_t M) {
    const std::size_t n = table.max_radius();
    if (r > n) throw RadiusOutOfRange("ball radius exceeds the word length");
    if (M < 3) {
        throw RadiusInapplicable("word length too short for the annulus bound");
    }
    if (std::uint64_t(r) * std::uint64_t(r) <= std::uint64_t(n)) {
        throw RadiusInapplicable("radius must exceed sqrt(n) for the annulus bound");
    }
}

double sphere_ratio(const SphereSizeTable& table, std::size_t high, std::size_t low) {
    if (high > table.max_radius()) return 0.0;  // s_{n+1} = 0 convention
    return ratio_as_double(table.sphere(high), table.sphere(low));
}

} // namespace

double ball_eigenvalue_lower_bound(const SphereSizeTable& table, std::size_t r) {
    const std::size_t n = table.max_radius();
    const std::size_t M = floor_sqrt(n);
    check_annulus_applicable(table, r, M);

    const double degree = ratio_as_double(table.profile().power_sum(1), Int(1));
    double sum = 0.0;
    for (std::size_t k = r - M + 2; k + 1 <= r; ++k) {
        const double up = sphere_ratio(table, k + 1, k);
        sum += double(k) * std::sqrt(sphere_ratio(table, k, k - 1));
        sum += degree - double(k) - double(k + 1) * up;
        sum += double(k + 1) * std::sqrt(up);
    }
    return sum / double(M);
}

double annulus_rayleigh(const SphereSizeTable& table, std::size_t r) {
    const std::size_t n = table.max_radius();
    const std::size_t M = floor_sqrt(n);
    check_annulus_applicable(table, r, M);

    const double degree = ratio_as_double(table.profile().power_sum(1), Int(1));
    double num = 0.0;
    for (std::size_t k = r - M + 1; k <= r; ++k) {
        const double up = sphere_ratio(table, k + 1, k);
        num += degree - double(k) - double(k + 1) * up;  // same-weight edges
        if (k < r) num += 2.0 * double(k + 1) * std::sqrt(up);
    }
    return num / double(M);
}

EvCertificate bound_by_ev_certificate(const AlphabetProfile& profile, std::size_t d,
                                      std::size_t r, std::size_t exact_cap) {
    const std::size_t n = profile.length();
    if (d < 1 || d > n) throw DistanceOutOfRange("certificate distance must be in 1..n");
    if (r > n) throw RadiusOutOfRange("certificate radius exceeds the word length");

    const SphereSizeTable table = sphere_sizes(profile);
    const Rat degree(profile.power_sum(1));

    EvCertificate cert;
    cert.ball_size = table.ball(r);
    cert.bound = Int(n) * cert.ball_size;
    const Rat threshold =
        degree * Rat(n + 1) / Rat(n) - Rat(profile.prefix_sum(d));
    cert.threshold = rat_as_double(threshold);

    if (r == n) {
        // The ball is all of Q, a degree-regular graph: lambda = P_1 exactly,
        // so the comparison stays rational.
        cert.lambda_available = true;
        cert.lambda_is_exact = true;
        cert.lambda = rat_as_double(degree);
        cert.fired = degree >= threshold;
        return cert;
    }

    if (cert.ball_size <= Int(exact_cap)) {
        try {
            const SubsetSpectrum spectrum = ball_spectrum(profile, r);
            cert.lambda_available = true;
            cert.lambda_is_exact = true;
            // A Rayleigh quotient never exceeds the true maximum eigenvalue,
            // so firing on it keeps the certificate conservative.
            cert.lambda = spectrum.lambda;
            cert.fired = cert.lambda >= cert.threshold;
            return cert;
        } catch (const SpaceTooLarge&) {
            // Small ball inside an unindexably large space: fall through to
            // the analytic bound.
        }
    }

    try {
        cert.lambda = ball_eigenvalue_lower_bound(table, r);
        cert.lambda_available = true;
        cert.lambda_is_exact = false;
        cert.fired = cert.lambda >= cert.threshold;
    } catch (const RadiusInapplicable&) {
        // No eigenvalue route at this size: report an unfired certificate.
    }
    return cert;
}

} // namespace mixedcodes
