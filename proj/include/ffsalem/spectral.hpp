#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "ffsalem/errors.hpp"
#include "ffsalem/pointset.hpp"
#include "ffsalem/space.hpp"

namespace ffsalem {

using cplx = std::complex<double>;

// Absolute per-coefficient tolerance for DFT comparisons: a conservative
// round-off envelope for d*p-deep complex summation.
inline double tau_dft(const SpaceParams& space, std::uint64_t cardinality) {
    return 1e-7 * std::sqrt(static_cast<double>(space.n)) *
           std::sqrt(static_cast<double>(std::max<std::uint64_t>(1, cardinality)));
}

// The p distinct character values exp(-2*pi*i*t/p), t = 0..p-1, computed
// once from the exact angle so phase error does not accumulate.
inline std::vector<cplx> character_table(std::uint32_t p) {
    if (!is_prime(p)) throw input_error("character table requires prime p");
    std::vector<cplx> table(p);
    for (std::uint32_t t = 0; t < p; ++t)
        table[t] = std::polar(1.0, -2.0 * std::numbers::pi * t / p);
    return table;
}

inline cplx character(std::uint32_t p, std::uint32_t t) {
    if (t >= p) throw input_error("character: residue out of range");
    return std::polar(1.0, -2.0 * std::numbers::pi * t / p);
}

// All n Fourier coefficients of a function on F_p^d.
struct Spectrum {
    SpaceParams space;
    std::vector<cplx> coeffs;
};

// Row-column DFT: d passes, each applying the naive length-p transform along
// one axis. Theta(d*n*p) complex multiply-adds. Summation order within each
// length-p line is fixed (k ascending), so results do not depend on how
// callers might partition the work.
inline Spectrum dft_full(std::vector<cplx> f, const SpaceParams& space) {
    if (f.size() != space.n) throw input_error("dft_full: array length must equal n");
    const auto table = character_table(space.p);
    const std::uint32_t p = space.p;
    std::vector<cplx> line_in(p), line_out(p);
    std::uint64_t stride = 1;
    for (std::uint32_t axis = 0; axis < space.d; ++axis) {
        const std::uint64_t block = stride * p;
        for (std::uint64_t base = 0; base < space.n; base += block) {
            for (std::uint64_t off = 0; off < stride; ++off) {
                const std::uint64_t start = base + off;
                for (std::uint32_t k = 0; k < p; ++k) line_in[k] = f[start + k * stride];
                for (std::uint32_t j = 0; j < p; ++j) {
                    cplx acc = 0.0;
                    for (std::uint32_t k = 0; k < p; ++k)
                        acc += line_in[k] * table[static_cast<std::uint64_t>(j) * k % p];
                    line_out[j] = acc;
                }
                for (std::uint32_t j = 0; j < p; ++j) f[start + j * stride] = line_out[j];
            }
        }
        stride = block;
    }
    return Spectrum{space, std::move(f)};
}

inline Spectrum dft_of_set(const PointSet& E) {
    std::vector<cplx> f(E.space().n, cplx{0.0, 0.0});
    for (std::uint64_t i = 0; i < E.space().n; ++i)
        if (E.membership()[i]) f[i] = cplx{1.0, 0.0};
    return dft_full(std::move(f), E.space());
}

// Single coefficient by direct summation over the members of E.
inline cplx dft_single(const PointSet& E, std::uint64_t xi) {
    const SpaceParams& space = E.space();
    if (xi >= space.n) throw input_error("dft_single: frequency index out of range");
    const auto table = character_table(space.p);
    cplx acc = 0.0;
    for (std::uint64_t x = 0; x < space.n; ++x)
        if (E.membership()[x]) acc += table[dot_indices(space, x, xi)];
    return acc;
}

struct PhiResult {
    double phi = 0.0;
    std::uint64_t argmax_xi = 0;  // >= 1
    std::uint64_t cardinality = 0;
};

// Phi(E) = max over nonzero xi of |E^(xi)|; ties go to the smallest index.
inline PhiResult phi_of_spectrum(const Spectrum& spec, std::uint64_t cardinality) {
    if (spec.space.n < 2) throw input_error("phi: no nonzero frequency exists for n < 2");
    double best = -1.0;
    std::uint64_t best_xi = 1;
    for (std::uint64_t xi = 1; xi < spec.space.n; ++xi) {
        const double mag = std::abs(spec.coeffs[xi]);
        if (mag > best) {
            best = mag;
            best_xi = xi;
        }
    }
    return PhiResult{best, best_xi, cardinality};
}

inline PhiResult phi(const PointSet& E) {
    return phi_of_spectrum(dft_of_set(E), E.cardinality());
}

// Phi(E) / sqrt(#E), the quantity the conjecture minimizes.
inline double salem_ratio(const PointSet& E) {
    if (E.cardinality() == 0) throw input_error("salem_ratio: empty set");
    return phi(E).phi / std::sqrt(static_cast<double>(E.cardinality()));
}

// | sum |E^|^2 - n*#E | / max(1, n*#E); should sit at round-off level.
inline double plancherel_residual(const PointSet& E) {
    const Spectrum spec = dft_of_set(E);
    double energy = 0.0;
    for (const cplx& c : spec.coeffs) energy += std::norm(c);
    const double expected = static_cast<double>(E.space().n) * static_cast<double>(E.cardinality());
    return std::abs(energy - expected) / std::max(1.0, expected);
}

// true iff Phi(E) <= C * sqrt(#E * ln n); natural logarithm.
inline bool weak_salem_check(const PointSet& E, double C) {
    if (E.cardinality() == 0) throw input_error("weak_salem_check: empty set");
    if (C <= 0.0) throw input_error("weak_salem_check: C must be positive");
    const double bound =
        C * std::sqrt(static_cast<double>(E.cardinality()) * std::log(static_cast<double>(E.space().n)));
    return phi(E).phi <= bound;
}

}  // namespace ffsalem
