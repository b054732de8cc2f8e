#pragma once

#include <cstdint>

namespace crowdrisk {

/// Deterministic 64-bit generator (splitmix64, Steele/Lea/Vigna 2014).
///
/// All randomness in a run flows from one 64-bit seed through this generator.
/// Substreams are derived with split(): substream k is seeded with
/// mix64(base_seed + (k+1)*GOLDEN), which decorrelates streams while keeping
/// them a pure function of (seed, k). Two runs with equal seeds and configs
/// therefore produce bit-identical draws on any platform (no reliance on
/// std::uniform_real_distribution, whose output is implementation-defined).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : seed_(seed), state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += GOLDEN);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), 53 mantissa bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in [a, b).
    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    /// Uniform integer in [0, n).
    std::uint64_t uniform_index(std::uint64_t n) { return next_u64() % n; }

    /// Independent substream k, derived from the base seed (not current state).
    SplitMix64 split(std::uint64_t k) const {
        return SplitMix64(mix64(seed_ + (k + 1) * GOLDEN));
    }

    static std::uint64_t mix64(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    static constexpr std::uint64_t GOLDEN = 0x9e3779b97f4a7c15ULL;
    std::uint64_t seed_;
    std::uint64_t state_;
};

}  // namespace crowdrisk
