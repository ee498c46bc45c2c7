#ifndef CCM_RNG_HPP
#define CCM_RNG_HPP

#include <cstdint>

#include "ccm/coloring.hpp"

namespace ccm {

/// SplitMix64 (Steele/Lea/Flood). Pinned here so instances regenerate
/// bit-identically from a seed in any reimplementation; see README.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0,1) from the top 53 bits.
    double next_unit() { return (next() >> 11) * 0x1.0p-53; }
};

/// Per-trial seed derivation: reproducible regardless of scheduling.
inline uint64_t derive_seed(uint64_t base, uint64_t index) {
    SplitMix64 g(base + 0x9E3779B97F4A7C15ULL * (index + 1));
    return g.next();
}

/// Each edge red independently with probability p_red; pairs drawn in
/// lexicographic order (1,2),(1,3),...,(N-1,N).
inline EdgeColoring random_coloring(int order, double p_red, uint64_t seed) {
    EdgeColoring c(order);
    SplitMix64 g(seed);
    for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v)
            if (g.next_unit() < p_red) c.set_color(u, v, Color::Red);
    return c;
}

}  // namespace ccm

#endif
