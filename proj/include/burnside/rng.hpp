#pragma once

#include <cstdint>

#include "burnside/intmat.hpp"

namespace burnside {

/// SplitMix64. Deterministic and platform-independent, unlike
/// std::uniform_int_distribution; report determinism depends on it.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [lo, hi] (inclusive); lo <= hi.
    Int range(Int lo, Int hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<Int>(next() % span);
    }

private:
    std::uint64_t state_;
};

} // namespace burnside
