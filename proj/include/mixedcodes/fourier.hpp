#ifndef MIXEDCODES_FOURIER_HPP
#define MIXEDCODES_FOURIER_HPP

#include "mixedcodes/oracle.hpp"
#include "mixedcodes/space.hpp"

#include <complex>
#include <vector>

namespace mixedcodes {

// Harmonic analysis over the product group Q = prod Z/(q_i Z), at desk scale:
// all transforms are direct O(|Q|^2) sums against cached per-coordinate roots
// of unity, precise and obviously correct rather than fast.
//
// Conventions (asymmetric on purpose; they make the transform an isometry):
//   - characters chi_t(x) = prod_i exp(2 pi i t_i x_i / q_i), indexed by the
//     same tuples as group elements (generator fixed to 1 per coordinate);
//   - transform      F(t) = (1/|Q|) sum_x f(x) conj(chi_t(x));
//   - inversion      f(x) = sum_t F(t) chi_t(x)              (no 1/|Q|);
//   - group-side inner product and convolution carry 1/|Q|;
//   - character-side inner product and convolution carry no normalizer.

// A complex-valued function on Q (or on its character group; the index set is
// the same), stored densely in SpaceIndexer order.
class FunctionOnQ {
public:
    explicit FunctionOnQ(SpaceIndexer space);
    FunctionOnQ(SpaceIndexer space, std::vector<std::complex<double>> values);

    static FunctionOnQ constant(SpaceIndexer space, std::complex<double> value);
    static FunctionOnQ point_mass(SpaceIndexer space, std::size_t at,
                                  std::complex<double> value = 1.0);
    static FunctionOnQ indicator(SpaceIndexer space, const std::vector<std::size_t>& points);

    const SpaceIndexer& space() const { return space_; }
    std::size_t size() const { return values_.size(); }
    std::complex<double>& operator[](std::size_t i) { return values_[i]; }
    const std::complex<double>& operator[](std::size_t i) const { return values_[i]; }
    const std::vector<std::complex<double>>& values() const { return values_; }

private:
    SpaceIndexer space_;
    std::vector<std::complex<double>> values_;
};

// chi_t(x); both tuples are validated against the profile.
std::complex<double> character_value(const AlphabetProfile& profile, const CharacterIndex& t,
                                     const GroupElement& x);

// F(t) = (1/|Q|) sum_x f(x) conj(chi_t(x)).
FunctionOnQ fourier_transform(const FunctionOnQ& f);

// f(x) = sum_t F(t) chi_t(x); the exact inverse of fourier_transform.
FunctionOnQ inverse_fourier_transform(const FunctionOnQ& F);

// Group-side convolution (f * h)(x) = (1/|Q|) sum_y f(y) h(x - y).
FunctionOnQ convolve(const FunctionOnQ& f, const FunctionOnQ& h);

// Character-side convolution (F * H)(t) = sum_s F(s) H(t - s), no normalizer.
FunctionOnQ convolve_characters(const FunctionOnQ& F, const FunctionOnQ& H);

// E(f) = (1/|Q|) sum_x f(x).
std::complex<double> expectation(const FunctionOnQ& f);

// <f, h> = (1/|Q|) sum_x f(x) conj(h(x)) on the group side.
std::complex<double> inner_product_group(const FunctionOnQ& f, const FunctionOnQ& h);

// <F, H> = sum_t F(t) conj(H(t)) on the character side.
std::complex<double> inner_product_characters(const FunctionOnQ& F, const FunctionOnQ& H);

// The weight-one kernel: |Q| on each weight-1 word, 0 elsewhere. Convolving
// with it applies the Hamming-graph adjacency operator: f * kernel = A f.
FunctionOnQ adjacency_kernel(SpaceIndexer space);

// Closed form of the kernel's transform at character t:
//   sum_i (q_i - 1) - sum_{i : t_i != 0} q_i,
// an (possibly negative) integer.
std::int64_t adjacency_kernel_transform_value(const AlphabetProfile& profile,
                                              const CharacterIndex& t);

// (A f)(x) = sum_{y : d(x, y) = 1} f(y), by direct neighbor walk.
FunctionOnQ adjacency_apply(const FunctionOnQ& f);

// The code's spectral witness: with c = 1_C * 1_{-C} (autocorrelation),
//   phi(x) = sum_y sqrt(c(y)) chi_y(x).
// Construction self-checks (InternalCheckFailed on violation): phi is real
// and even to 1e-9, its transform returns sqrt(c) to the scaled tolerance,
// phi * phi is nonnegative to 1e-9, and E(phi^2) / E(phi)^2 equals |C| to
// relative 1e-8.
FunctionOnQ code_spectral_witness(const CodeSet& code);

// f'(g) = sum_t f(t) chi_t(g), the function whose character-side values are
// f's group-side values. Verified in-op against the identity
// f'(g) = |Q| F(-g) to the scaled tolerance (InternalCheckFailed otherwise).
FunctionOnQ dual_function(const FunctionOnQ& f);

// Absolute tolerance for identity checks: 1e-10 up to 1296 points, scaled
// linearly with |Q| beyond.
double identity_tolerance(std::size_t space_size);

} // namespace mixedcodes

#endif
