#pragma once

#include <cstdint>
#include <cstdlib>
#include <span>
#include <string>
#include <vector>

#include "ffsalem/errors.hpp"

namespace ffsalem {

inline constexpr std::uint64_t kDefaultPointBudget = std::uint64_t{1} << 26;

// Maximum admissible p^d; overridable via the FFSALEM_BUDGET environment
// variable (decimal point count).
inline std::uint64_t point_budget() {
    if (const char* env = std::getenv("FFSALEM_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
        throw input_error("FFSALEM_BUDGET must be a positive decimal integer");
    }
    return kDefaultPointBudget;
}

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

// The ambient space F_p^d with n = p^d points.
struct SpaceParams {
    std::uint32_t p = 0;
    std::uint32_t d = 0;
    std::uint64_t n = 0;

    static SpaceParams create(std::uint32_t p, std::uint32_t d) {
        if (!is_prime(p)) throw input_error("p must be prime, got " + std::to_string(p));
        if (d < 1) throw input_error("dimension d must be >= 1");
        const std::uint64_t budget = point_budget();
        std::uint64_t n = 1;
        for (std::uint32_t i = 0; i < d; ++i) {
            if (n > budget / p) throw resource_error("p^d exceeds the point budget");
            n *= p;
        }
        return SpaceParams{p, d, n};
    }

    friend bool operator==(const SpaceParams&, const SpaceParams&) = default;
};

// Little-endian base-p encoding: coords[0] is the least-significant digit.
inline std::uint64_t index_of(const SpaceParams& space, std::span<const std::uint32_t> coords) {
    if (coords.size() != space.d)
        throw input_error("coordinate tuple must have length d");
    std::uint64_t idx = 0;
    std::uint64_t weight = 1;
    for (std::uint32_t i = 0; i < space.d; ++i) {
        if (coords[i] >= space.p)
            throw input_error("residue out of range [0, p-1]");
        idx += coords[i] * weight;
        weight *= space.p;
    }
    return idx;
}

inline std::vector<std::uint32_t> coords_of(const SpaceParams& space, std::uint64_t index) {
    if (index >= space.n) throw input_error("point index out of range [0, n-1]");
    std::vector<std::uint32_t> coords(space.d);
    for (std::uint32_t i = 0; i < space.d; ++i) {
        coords[i] = static_cast<std::uint32_t>(index % space.p);
        index /= space.p;
    }
    return coords;
}

// (sum_i x_i * xi_i) mod p
inline std::uint32_t dot(const SpaceParams& space, std::span<const std::uint32_t> x,
                         std::span<const std::uint32_t> xi) {
    if (x.size() != space.d || xi.size() != space.d)
        throw input_error("dot: tuples must have length d");
    std::uint64_t acc = 0;
    for (std::uint32_t i = 0; i < space.d; ++i) {
        if (x[i] >= space.p || xi[i] >= space.p)
            throw input_error("dot: residue out of range");
        acc += std::uint64_t{x[i]} * xi[i] % space.p;
    }
    return static_cast<std::uint32_t>(acc % space.p);
}

// Same inner product but on encoded indices.
inline std::uint32_t dot_indices(const SpaceParams& space, std::uint64_t x, std::uint64_t xi) {
    if (x >= space.n || xi >= space.n) throw input_error("dot: point index out of range");
    std::uint64_t acc = 0;
    for (std::uint32_t i = 0; i < space.d; ++i) {
        acc += (x % space.p) * (xi % space.p) % space.p;
        x /= space.p;
        xi /= space.p;
    }
    return static_cast<std::uint32_t>(acc % space.p);
}

}  // namespace ffsalem
