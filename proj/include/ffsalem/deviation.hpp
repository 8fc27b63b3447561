#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "ffsalem/errors.hpp"
#include "ffsalem/space.hpp"

namespace ffsalem {

// Parameters of the large deviation bound for sums of N independent
// variables with |X_j| <= 1: mu1 = sum E[X_j], mu2 = sum E[X_j^2].
struct DeviationParams {
    std::uint64_t N = 1;
    double mu1 = 0.0;
    double mu2 = 0.0;
    double alpha = 0.0;
    double lambda = 0.0;
};

// e^{-lambda*alpha + lambda^2*mu2} * (e^{lambda*mu1} + e^{-lambda*mu1}).
// May exceed 1 (vacuous); returned as-is, never clamped.
inline double deviation_bound(const DeviationParams& params) {
    if (!(params.lambda > 0.0 && params.lambda < 1.0))
        throw input_error("deviation_bound: lambda must lie in (0,1)");
    if (!(params.alpha > 0.0)) throw input_error("deviation_bound: alpha must be positive");
    if (params.mu2 < 0.0) throw input_error("deviation_bound: mu2 must be nonnegative");
    if (std::abs(params.mu1) > static_cast<double>(params.N))
        throw input_error("deviation_bound: |mu1| cannot exceed N");
    const double l = params.lambda;
    return std::exp(-l * params.alpha + l * l * params.mu2) *
           (std::exp(l * params.mu1) + std::exp(-l * params.mu1));
}

// mu2 = n*delta/2, the proof's second moment for the cosine-weighted summands.
inline double proof_mu2(std::uint64_t n, double delta) {
    if (!(delta > 0.0 && delta < 1.0)) throw input_error("delta must lie in (0,1)");
    return static_cast<double>(n) * delta / 2.0;
}

// The (alpha, lambda) pair the percolation proof substitutes into the
// deviation bound. lambda <= 1 is the proof's hypothesis; it fails only
// for tiny n and is flagged rather than silently ignored.
struct TheoremParams {
    double epsilon = 0.0;
    double delta = 0.0;
    std::uint64_t n = 0;
    double alpha = 0.0;
    double lambda = 0.0;
    bool lambda_valid = false;

    static TheoremParams create(std::uint64_t n, double delta, double epsilon) {
        if (n < 2) throw input_error("n must be >= 2");
        if (!(delta > 0.0 && delta < 1.0)) throw input_error("delta must lie in (0,1)");
        if (!(epsilon > 0.0)) throw input_error("epsilon must be positive");
        const double nn = static_cast<double>(n);
        const double alpha = std::sqrt(2.0 * (1.0 + epsilon) * nn * delta * std::log(nn));
        const double lambda = alpha / (nn * delta);
        return TheoremParams{epsilon, delta, n, alpha, lambda, lambda <= 1.0};
    }
};

// Percolation threshold 2*sqrt((1+eps)*delta*n*ln n) = sqrt(2)*alpha.
inline double main_threshold(std::uint64_t n, double delta, double epsilon) {
    if (n < 2) throw input_error("n must be >= 2");
    if (!(delta > 0.0 && delta < 1.0)) throw input_error("delta must lie in (0,1)");
    if (!(epsilon > 0.0)) throw input_error("epsilon must be positive");
    const double nn = static_cast<double>(n);
    return 2.0 * std::sqrt((1.0 + epsilon) * delta * nn * std::log(nn));
}

// Uniform-model threshold 2*sqrt(2*(1+eps)*m*ln n), valid for m <= n/2.
inline double hayes_threshold(std::uint64_t m, std::uint64_t n, double epsilon) {
    if (m < 1) throw input_error("m must be >= 1");
    if (2 * m > n) throw input_error("hypothesis requires m <= n/2");
    if (!(epsilon > 0.0)) throw input_error("epsilon must be positive");
    return 2.0 * std::sqrt(2.0 * (1.0 + epsilon) * static_cast<double>(m) *
                           std::log(static_cast<double>(n)));
}

// 4*n^{-eps}, the union-bounded failure probability.
inline double failure_prob_bound(std::uint64_t n, double epsilon) {
    if (n < 2) throw input_error("n must be >= 2");
    if (!(epsilon > 0.0)) throw input_error("epsilon must be positive");
    return 4.0 * std::pow(static_cast<double>(n), -epsilon);
}

// 4(1-delta)/(n*delta), the Chebyshev bound on P(|#E - n*delta| >= n*delta/2).
inline double chebyshev_size_bound(std::uint64_t n, double delta) {
    if (!(delta > 0.0 && delta < 1.0)) throw input_error("delta must lie in (0,1)");
    return 4.0 * (1.0 - delta) / (static_cast<double>(n) * delta);
}

struct CosineIdentityResult {
    double cos_sum_abs = 0.0;   // |sum cos(2*pi*x.xi/p)|
    double cos_sq_dev = 0.0;    // |sum cos^2 - n/2|
    double sin_sum_abs = 0.0;
    double sin_sq_dev = 0.0;
    // The squared-sum identities need 2*xi != 0, which fails exactly at p=2.
    bool square_identity_valid = true;
};

// Evaluates the cosine/sine sum identities at a nonzero frequency.
inline CosineIdentityResult cosine_identity_check(const SpaceParams& space, std::uint64_t xi) {
    if (xi == 0) throw input_error("cosine_identity_check: xi must be nonzero");
    if (xi >= space.n) throw input_error("cosine_identity_check: xi out of range");
    double cs = 0.0, cs2 = 0.0, ss = 0.0, ss2 = 0.0;
    for (std::uint64_t x = 0; x < space.n; ++x) {
        const double theta = 2.0 * std::numbers::pi * dot_indices(space, x, xi) / space.p;
        const double c = std::cos(theta), s = std::sin(theta);
        cs += c;
        cs2 += c * c;
        ss += s;
        ss2 += s * s;
    }
    const double half_n = static_cast<double>(space.n) / 2.0;
    return CosineIdentityResult{std::abs(cs), std::abs(cs2 - half_n), std::abs(ss),
                                std::abs(ss2 - half_n), space.p != 2};
}

}  // namespace ffsalem
