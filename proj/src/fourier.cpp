#include "mixedcodes/fourier.hpp"

#include "mixedcodes/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mixedcodes {

namespace {

constexpr double kTau = 6.283185307179586476925286766559;

// Dense transforms hold |Q| complex values and run O(|Q|^2) sums; past this
// cap the direct approach stops being a sensible tool.
constexpr std::uint64_t kDenseCap = std::uint64_t(1) << 22;

using Cx = std::complex<double>;

// roots[i][k] = exp(2 pi i k / q_i); conjugation is index negation mod q_i.
std::vector<std::vector<Cx>> root_tables(const AlphabetProfile& profile) {
    std::vector<std::vector<Cx>> roots(profile.length());
    for (std::size_t i = 0; i < profile.length(); ++i) {
        const std::uint32_t q = profile.size_at(i);
        roots[i].resize(q);
        for (std::uint32_t k = 0; k < q; ++k) {
            roots[i][k] = std::polar(1.0, kTau * double(k) / double(q));
        }
    }
    return roots;
}

// Coordinate tuples of every index, flattened in index order.
std::vector<std::uint32_t> all_tuples(const SpaceIndexer& space) {
    const std::size_t n = space.dimensions();
    const std::size_t m = space.size();
    std::vector<std::uint32_t> flat(n * m);
    std::vector<std::uint32_t> cur(n, 0);
    for (std::size_t idx = 0; idx < m; ++idx) {
        std::copy(cur.begin(), cur.end(), flat.begin() + idx * n);
        for (std::size_t i = 0; i < n; ++i) {
            if (++cur[i] < space.profile().size_at(i)) break;
            cur[i] = 0;
        }
    }
    return flat;
}

enum class Direction { Forward, Inverse };

// Forward: out(t) = (1/|Q|) sum_x f(x) conj(chi_t(x)).
// Inverse: out(x) = sum_t f(t) chi_t(x).
// Both kernels are prod_i roots[i][t_i x_i mod q_i] up to conjugation, so one
// loop serves, with the sign folded into the root index.
FunctionOnQ transform_impl(const FunctionOnQ& f, Direction dir) {
    const SpaceIndexer& space = f.space();
    const AlphabetProfile& profile = space.profile();
    const std::size_t n = profile.length();
    const std::size_t m = space.size();
    const auto roots = root_tables(profile);
    const auto tuples = all_tuples(space);

    std::vector<Cx> out(m);
    const double scale = dir == Direction::Forward ? 1.0 / double(m) : 1.0;
    for (std::size_t a = 0; a < m; ++a) {
        const std::uint32_t* ta = &tuples[a * n];
        Cx acc = 0.0;
        for (std::size_t b = 0; b < m; ++b) {
            if (f[b] == Cx(0.0)) continue;
            const std::uint32_t* tb = &tuples[b * n];
            Cx chi = 1.0;
            for (std::size_t i = 0; i < n; ++i) {
                const std::uint32_t q = profile.size_at(i);
                std::uint32_t k =
                    std::uint32_t((std::uint64_t(ta[i]) * std::uint64_t(tb[i])) % q);
                if (dir == Direction::Forward && k != 0) k = q - k;
                chi *= roots[i][k];
            }
            acc += f[b] * chi;
        }
        out[a] = acc * scale;
    }
    return FunctionOnQ(space, std::move(out));
}

FunctionOnQ convolve_impl(const FunctionOnQ& f, const FunctionOnQ& h, bool normalized) {
    if (!(f.space().profile() == h.space().profile())) {
        throw ProfileMismatch("convolution operands live on different spaces");
    }
    const SpaceIndexer& space = f.space();
    const std::size_t m = space.size();
    std::vector<Cx> out(m, Cx(0.0));
    for (std::size_t y = 0; y < m; ++y) {
        const Cx fy = f[y];
        if (fy == Cx(0.0)) continue;
        for (std::size_t x = 0; x < m; ++x) {
            out[x] += fy * h[space.subtract(x, y)];
        }
    }
    if (normalized) {
        const double scale = 1.0 / double(m);
        for (Cx& v : out) v *= scale;
    }
    return FunctionOnQ(space, std::move(out));
}

void check_tuple(const AlphabetProfile& profile, const GroupElement& x, const char* what) {
    if (x.coords.size() != profile.length()) {
        throw ProfileMismatch(std::string(what) + " has wrong coordinate count");
    }
    for (std::size_t i = 0; i < x.coords.size(); ++i) {
        if (x.coords[i] >= profile.size_at(i)) {
            throw IndexOutOfRange(std::string(what) + " coordinate exceeds its alphabet");
        }
    }
}

} // namespace

double identity_tolerance(std::size_t space_size) {
    return 1e-10 * std::max(1.0, double(space_size) / 1296.0);
}

FunctionOnQ::FunctionOnQ(SpaceIndexer space) : space_(std::move(space)) {
    if (space_.size() > kDenseCap) {
        throw SpaceTooLarge("space too large for dense function storage");
    }
    values_.assign(space_.size(), Cx(0.0));
}

FunctionOnQ::FunctionOnQ(SpaceIndexer space, std::vector<std::complex<double>> values)
    : space_(std::move(space)), values_(std::move(values)) {
    if (space_.size() > kDenseCap) {
        throw SpaceTooLarge("space too large for dense function storage");
    }
    if (values_.size() != space_.size()) {
        throw PreconditionViolated("value vector length must equal the space size");
    }
}

FunctionOnQ FunctionOnQ::constant(SpaceIndexer space, std::complex<double> value) {
    FunctionOnQ f(std::move(space));
    std::fill(f.values_.begin(), f.values_.end(), value);
    return f;
}

FunctionOnQ FunctionOnQ::point_mass(SpaceIndexer space, std::size_t at,
                                    std::complex<double> value) {
    FunctionOnQ f(std::move(space));
    if (at >= f.size()) throw IndexOutOfRange("point mass index outside the space");
    f.values_[at] = value;
    return f;
}

FunctionOnQ FunctionOnQ::indicator(SpaceIndexer space, const std::vector<std::size_t>& points) {
    FunctionOnQ f(std::move(space));
    for (std::size_t p : points) {
        if (p >= f.size()) throw IndexOutOfRange("indicator index outside the space");
        f.values_[p] = Cx(1.0);
    }
    return f;
}

std::complex<double> character_value(const AlphabetProfile& profile, const CharacterIndex& t,
                                     const GroupElement& x) {
    check_tuple(profile, t, "character index");
    check_tuple(profile, x, "group element");
    Cx value = 1.0;
    for (std::size_t i = 0; i < profile.length(); ++i) {
        const std::uint32_t q = profile.size_at(i);
        const std::uint64_t k = (std::uint64_t(t.coords[i]) * std::uint64_t(x.coords[i])) % q;
        value *= std::polar(1.0, kTau * double(k) / double(q));
    }
    return value;
}

FunctionOnQ fourier_transform(const FunctionOnQ& f) {
    return transform_impl(f, Direction::Forward);
}

FunctionOnQ inverse_fourier_transform(const FunctionOnQ& F) {
    return transform_impl(F, Direction::Inverse);
}

FunctionOnQ convolve(const FunctionOnQ& f, const FunctionOnQ& h) {
    return convolve_impl(f, h, true);
}

FunctionOnQ convolve_characters(const FunctionOnQ& F, const FunctionOnQ& H) {
    return convolve_impl(F, H, false);
}

std::complex<double> expectation(const FunctionOnQ& f) {
    Cx acc = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) acc += f[i];
    return acc / double(f.size());
}

std::complex<double> inner_product_group(const FunctionOnQ& f, const FunctionOnQ& h) {
    if (!(f.space().profile() == h.space().profile())) {
        throw ProfileMismatch("inner product operands live on different spaces");
    }
    Cx acc = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) acc += f[i] * std::conj(h[i]);
    return acc / double(f.size());
}

std::complex<double> inner_product_characters(const FunctionOnQ& F, const FunctionOnQ& H) {
    if (!(F.space().profile() == H.space().profile())) {
        throw ProfileMismatch("inner product operands live on different spaces");
    }
    Cx acc = 0.0;
    for (std::size_t i = 0; i < F.size(); ++i) acc += F[i] * std::conj(H[i]);
    return acc;
}

FunctionOnQ adjacency_kernel(SpaceIndexer space) {
    const double mass = double(space.size());
    FunctionOnQ kernel(std::move(space));
    for (std::size_t idx : sphere_indices(kernel.space(), 1)) {
        kernel[idx] = Cx(mass);
    }
    return kernel;
}

std::int64_t adjacency_kernel_transform_value(const AlphabetProfile& profile,
                                              const CharacterIndex& t) {
    check_tuple(profile, t, "character index");
    std::int64_t value = 0;
    for (std::size_t i = 0; i < profile.length(); ++i) {
        const std::int64_t q = profile.size_at(i);
        value += t.coords[i] == 0 ? q - 1 : std::int64_t(-1);
    }
    return value;
}

FunctionOnQ adjacency_apply(const FunctionOnQ& f) {
    const SpaceIndexer& space = f.space();
    FunctionOnQ out(space);
    for (std::size_t x = 0; x < f.size(); ++x) {
        Cx acc = 0.0;
        space.for_each_neighbor(x, [&](std::size_t y) { acc += f[y]; });
        out[x] = acc;
    }
    return out;
}

FunctionOnQ code_spectral_witness(const CodeSet& code) {
    if (code.elements.empty()) throw EmptyCode("spectral witness needs a nonempty code");
    SpaceIndexer space(code.profile);
    const std::size_t m = space.size();
    const double tol = identity_tolerance(m);

    FunctionOnQ ind = FunctionOnQ::indicator(space, code.elements);
    std::vector<std::size_t> negated(code.elements.size());
    for (std::size_t i = 0; i < code.elements.size(); ++i) {
        negated[i] = space.negate(code.elements[i]);
    }
    FunctionOnQ ind_neg = FunctionOnQ::indicator(space, negated);

    // Autocorrelation c(y) = (1/|Q|) #{(a, b) in C^2 : a - b = y}: real,
    // even, nonnegative, with c(0) = |C|/|Q|.
    FunctionOnQ auto_corr = convolve(ind, ind_neg);
    FunctionOnQ root(space);
    for (std::size_t y = 0; y < m; ++y) {
        const Cx v = auto_corr[y];
        if (std::abs(v.imag()) > tol || v.real() < -tol) {
            throw InternalCheckFailed("code autocorrelation is not real nonnegative");
        }
        root[y] = Cx(std::sqrt(std::max(0.0, v.real())));
    }

    // phi(x) = sum_y sqrt(c(y)) chi_y(x), i.e. the inversion sum applied to
    // the square-rooted autocorrelation.
    FunctionOnQ phi = inverse_fourier_transform(root);

    for (std::size_t x = 0; x < m; ++x) {
        if (std::abs(phi[x].imag()) > 1e-9) {
            throw InternalCheckFailed("spectral witness is not real");
        }
        if (std::abs(phi[x] - phi[space.negate(x)]) > 1e-9) {
            throw InternalCheckFailed("spectral witness is not even");
        }
        phi[x] = Cx(phi[x].real());
    }

    FunctionOnQ back = fourier_transform(phi);
    for (std::size_t y = 0; y < m; ++y) {
        if (std::abs(back[y] - root[y]) > tol) {
            throw InternalCheckFailed("spectral witness transform mismatch");
        }
    }

    FunctionOnQ self = convolve(phi, phi);
    for (std::size_t x = 0; x < m; ++x) {
        if (self[x].real() < -1e-9 || std::abs(self[x].imag()) > 1e-9) {
            throw InternalCheckFailed("spectral witness self-convolution is negative");
        }
    }

    // E(phi^2) / E(phi)^2 recovers |C|; E(phi) = sqrt(|C|/|Q|) > 0 keeps the
    // quotient well defined.
    double mean = 0.0;
    double mean_sq = 0.0;
    for (std::size_t x = 0; x < m; ++x) {
        mean += phi[x].real();
        mean_sq += phi[x].real() * phi[x].real();
    }
    mean /= double(m);
    mean_sq /= double(m);
    const double recovered = mean_sq / (mean * mean);
    const double expected = double(code.elements.size());
    if (std::abs(recovered - expected) > 1e-8 * expected) {
        throw InternalCheckFailed("spectral witness does not recover the code size");
    }
    return phi;
}

FunctionOnQ dual_function(const FunctionOnQ& f) {
    const SpaceIndexer& space = f.space();
    FunctionOnQ dual = inverse_fourier_transform(f);

    // Cross-route check: the same values must equal |Q| F(-g) for the forward
    // transform F, to the identity tolerance scaled by the data's magnitude.
    FunctionOnQ forward = fourier_transform(f);
    double max_abs = 1.0;
    for (std::size_t i = 0; i < f.size(); ++i) max_abs = std::max(max_abs, std::abs(f[i]));
    const double tol = identity_tolerance(space.size()) * max_abs * double(space.size());
    for (std::size_t g = 0; g < f.size(); ++g) {
        const Cx other = forward[space.negate(g)] * double(space.size());
        if (std::abs(dual[g] - other) > tol) {
            throw InternalCheckFailed("dual function disagrees with reflected transform");
        }
    }
    return dual;
}

} // namespace mixedcodes
