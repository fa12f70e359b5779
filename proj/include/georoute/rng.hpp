#pragma once

// Deterministic per-index random streams. Every sampled quantity in the
// library derives from a single config seed through splitmix64, so results
// are bit-identical regardless of thread count or scheduling.

#include <cstdint>

#include "georoute/geometry.hpp"

namespace georoute {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Independent stream for (seed, index) pairs.
struct RandomStream {
    std::uint64_t state;

    RandomStream(std::uint64_t seed, std::uint64_t index) : state(seed) {
        state ^= 0x2545f4914f6cdd1dULL * (index + 1);
        // warm up so nearby indices decorrelate
        std::uint64_t s = state;
        (void)splitmix64(s);
        state = splitmix64(s);
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53; }

    /// Uniform point in the closed disk of the given radius about the origin.
    Point in_disk(double radius) {
        const double r = radius * std::sqrt(uniform());
        const double theta = 2.0 * M_PI * uniform();
        return Point{r * std::cos(theta), r * std::sin(theta)};
    }
};

}  // namespace georoute
