#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ffsalem/errors.hpp"
#include "ffsalem/pointset.hpp"
#include "ffsalem/space.hpp"

namespace ffsalem {

// {(x, x.x) : x in F_p^{d-1}} with x.x = sum x_i^2 mod p. The free vector
// occupies coordinates 0..d-2, the quadratic value coordinate d-1.
// Cardinality is exactly p^{d-1}. Needs odd p for the Gauss-sum behavior.
inline PointSet paraboloid(const SpaceParams& space) {
    if (space.d < 2) throw input_error("paraboloid requires d >= 2");
    if (space.p == 2) throw input_error("paraboloid requires odd p");
    const std::uint64_t base = space.n / space.p;  // p^{d-1}
    PointSet E(space);
    for (std::uint64_t x = 0; x < base; ++x) {
        std::uint64_t rest = x;
        std::uint64_t s = 0;
        for (std::uint32_t i = 0; i + 1 < space.d; ++i) {
            const std::uint64_t c = rest % space.p;
            s = (s + c * c) % space.p;
            rest /= space.p;
        }
        E.set(x + s * base, true);
    }
    return E;
}

// {x in F_p^d : sum x_i^2 = r mod p}; r = 0 is admitted (degenerate cone).
inline PointSet sphere(const SpaceParams& space, std::uint32_t r) {
    if (space.d < 2) throw input_error("sphere requires d >= 2");
    if (space.p == 2) throw input_error("sphere requires odd p");
    if (r >= space.p) throw input_error("sphere: r must be a residue in [0, p-1]");
    PointSet E(space);
    for (std::uint64_t x = 0; x < space.n; ++x) {
        std::uint64_t rest = x;
        std::uint64_t s = 0;
        for (std::uint32_t i = 0; i < space.d; ++i) {
            const std::uint64_t c = rest % space.p;
            s = (s + c * c) % space.p;
            rest /= space.p;
        }
        if (s == r) E.set(x, true);
    }
    return E;
}

namespace detail {

// Row reduction mod p; returns the rank.
inline std::uint32_t rank_mod_p(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p,
                                std::uint32_t d) {
    std::uint32_t rank = 0;
    for (std::uint32_t col = 0; col < d && rank < rows.size(); ++col) {
        std::uint32_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        // modular inverse by Fermat
        std::uint64_t inv = 1, b = rows[rank][col], e = p - 2;
        while (e) {
            if (e & 1) inv = inv * b % p;
            b = b * b % p;
            e >>= 1;
        }
        for (std::uint32_t j = 0; j < d; ++j)
            rows[rank][j] = static_cast<std::uint32_t>(rows[rank][j] * inv % p);
        for (std::uint32_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            const std::uint64_t factor = rows[i][col];
            for (std::uint32_t j = 0; j < d; ++j)
                rows[i][j] = static_cast<std::uint32_t>(
                    (rows[i][j] + (p - factor % p) * rows[rank][j]) % p);
        }
        ++rank;
    }
    return rank;
}

}  // namespace detail

// {offset + sum c_i b_i : c in F_p^k}. Basis vectors are given as coordinate
// tuples and must be linearly independent mod p. Cardinality p^k.
inline PointSet affine_subspace(const SpaceParams& space,
                                const std::vector<std::vector<std::uint32_t>>& basis,
                                std::span<const std::uint32_t> offset) {
    if (offset.size() != space.d) throw input_error("offset must have length d");
    for (const auto& b : basis)
        if (b.size() != space.d) throw input_error("basis vectors must have length d");
    const std::uint32_t k = static_cast<std::uint32_t>(basis.size());
    if (k > space.d || detail::rank_mod_p(basis, space.p, space.d) != k)
        throw input_error("basis vectors must be linearly independent over F_p");

    PointSet E(space);
    std::uint64_t combos = 1;
    for (std::uint32_t i = 0; i < k; ++i) combos *= space.p;
    std::vector<std::uint32_t> point(space.d);
    for (std::uint64_t c = 0; c < combos; ++c) {
        for (std::uint32_t j = 0; j < space.d; ++j) point[j] = offset[j];
        std::uint64_t rest = c;
        for (std::uint32_t i = 0; i < k; ++i) {
            const std::uint64_t coef = rest % space.p;
            rest /= space.p;
            for (std::uint32_t j = 0; j < space.d; ++j)
                point[j] = static_cast<std::uint32_t>((point[j] + coef * basis[i][j]) % space.p);
        }
        E.set(index_of(space, point), true);
    }
    return E;
}

}  // namespace ffsalem
