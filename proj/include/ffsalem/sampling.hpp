#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "ffsalem/errors.hpp"
#include "ffsalem/pointset.hpp"
#include "ffsalem/rng.hpp"
#include "ffsalem/space.hpp"

namespace ffsalem {

// Percolation model Omega(F_p^d, delta): each point kept independently with
// probability delta. Exactly one uniform variate per point, consumed in
// index order 0..n-1; the draw count is part of the interface.
inline PointSet sample_bernoulli(const SpaceParams& space, double delta, SeedSpec seed) {
    if (!(delta > 0.0 && delta < 1.0)) throw input_error("delta must lie in (0,1)");
    SplitStream stream(seed);
    PointSet E(space);
    for (std::uint64_t i = 0; i < space.n; ++i)
        if (stream.next_unit() < delta) E.set(i, true);
    return E;
}

// Uniform model Omega(F_p^d, m): Fisher-Yates partial shuffle of the index
// array, m swap draws, every m-subset exactly equally likely.
inline PointSet sample_uniform_m(const SpaceParams& space, std::uint64_t m, SeedSpec seed) {
    if (m > space.n) throw input_error("m must not exceed n");
    SplitStream stream(seed);
    std::vector<std::uint64_t> idx(space.n);
    std::iota(idx.begin(), idx.end(), 0);
    PointSet E(space);
    for (std::uint64_t i = 0; i < m; ++i) {
        const std::uint64_t j = i + stream.next_below(space.n - i);
        std::swap(idx[i], idx[j]);
        E.set(idx[i], true);
    }
    return E;
}

}  // namespace ffsalem
