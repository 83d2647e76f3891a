#ifndef MIXEDCODES_SPECTRAL_HPP
#define MIXEDCODES_SPECTRAL_HPP

#include "mixedcodes/exact.hpp"
#include "mixedcodes/space.hpp"
#include "mixedcodes/sphere.hpp"

#include <cstdint>
#include <vector>

namespace mixedcodes {

// Spectral side of the Hamming graph on Q (vertices Q, edges at distance 1):
// the Perron eigenvalue of subgraphs induced by balls, an analytic lower
// bound for it driven by exact sphere sizes, and the eigenvalue-threshold
// code-size certificate it feeds.

// Perron data of the adjacency minor on a vertex subset.
struct SubsetSpectrum {
    std::vector<std::size_t> subset;    // ascending space indices
    double lambda = 0.0;                // maximum eigenvalue, >= 0
    std::vector<double> eigenfunction;  // unit norm, nonnegative, aligned with subset
    std::size_t iterations = 0;
    bool even_symmetrized = false;      // subset was negation-closed
    bool shifted_retry = false;         // converged only after the A + cI restart
};

// Power iteration with the deterministic all-ones start. Accepts when
// successive Rayleigh quotients differ by < 1e-12 and the residual
// ||A f - lambda f|| is <= 1e-9 * max(1, |lambda|); the residual guard
// rejects the false Rayleigh plateaus of near-bipartite subgraphs, which are
// retried with the shifted operator A + cI, c = max degree (nonnegative
// spectrum, same eigenvectors). Negation-closed subsets are symmetrized to an
// even eigenfunction. Throws EmptySubset or NoConvergence.
SubsetSpectrum top_eigenvalue(const SpaceIndexer& space, std::vector<std::size_t> subset);

// top_eigenvalue on the radius-r ball around 0.
SubsetSpectrum ball_spectrum(const AlphabetProfile& profile, std::size_t r);

// Analytic lower bound on the ball's maximum eigenvalue, from exact sphere
// sizes: with M = floor(sqrt(n)),
//   (1/M) sum_{k=r-M+2}^{r-1} [ k sqrt(s_k/s_{k-1}) + P_1 - k
//                               - (k+1) s_{k+1}/s_k + (k+1) sqrt(s_{k+1}/s_k) ],
// where P_1 = sum (q_i - 1) is the graph degree. Requires r <= n, r^2 > n,
// and M >= 3 (the sum is empty below that); throws RadiusInapplicable
// otherwise.
double ball_eigenvalue_lower_bound(const SphereSizeTable& table, std::size_t r);

// Rayleigh quotient of the explicit test function behind the bound
// (1/sqrt(s_wt(x)) on the annulus r-M < wt(x) <= r, else 0), for diagnostics:
// ball_eigenvalue_lower_bound <= this <= the exact lambda. Same applicability
// gate as the bound.
double annulus_rayleigh(const SphereSizeTable& table, std::size_t r);

// Eigenvalue-threshold certificate: when the radius-r ball's maximum
// eigenvalue reaches (n+1)(q_a - 1) - sum of the d smallest alphabet sizes,
// every code of minimum distance d has at most n * |B_r(0)| elements.
struct EvCertificate {
    bool fired = false;
    bool lambda_available = false;
    bool lambda_is_exact = false;  // iterated on the ball vs. the analytic bound
    double lambda = 0.0;
    double threshold = 0.0;
    Int ball_size;
    Int bound;                     // n * |B_r(0)|, meaningful when fired
};

// Certifies with the exact (power-iteration) eigenvalue when |B_r(0)| <=
// exact_cap, with the analytic lower bound otherwise; r = n is compared in
// exact rational arithmetic (the ball is the whole P_1-regular graph). A
// certificate that cannot fire is returned unfired, never an error.
EvCertificate bound_by_ev_certificate(const AlphabetProfile& profile, std::size_t d,
                                      std::size_t r, std::size_t exact_cap = 4096);

} // namespace mixedcodes

#endif
