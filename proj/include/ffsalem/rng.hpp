#pragma once

#include <cstdint>

namespace ffsalem {

// Seed contract: a (master_seed, stream_id) pair fully determines a draw
// sequence. Distinct stream_ids (e.g. trial indices) give independent
// streams regardless of execution order.
struct SeedSpec {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_id = 0;

    friend bool operator==(const SeedSpec&, const SeedSpec&) = default;
};

// SplitMix64 finalizer (Steele/Lea/Flood; Vigna's fixed-increment variant).
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Splittable generator: the stream key is the avalanche-mixed seed pair,
// then draws are SplitMix64 steps. Stateless up to a 64-bit counter, so
// the i-th draw of a stream is a pure function of (master_seed, stream_id, i).
class SplitStream {
  public:
    explicit SplitStream(SeedSpec seed)
        : state_(mix64(mix64(seed.master_seed + kGamma) + seed.stream_id * kGamma)) {}

    std::uint64_t next_u64() {
        state_ += kGamma;
        return mix64(state_);
    }

    // Uniform double in [0, 1); consumes exactly one 64-bit draw.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Unbiased integer in [0, bound); Lemire's multiply-shift with rejection.
    std::uint64_t next_below(std::uint64_t bound) {
        unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            const std::uint64_t t = (0 - bound) % bound;
            while (lo < t) {
                m = static_cast<unsigned __int128>(next_u64()) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

  private:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
    std::uint64_t state_;
};

}  // namespace ffsalem
