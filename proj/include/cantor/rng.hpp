// Counter-based random streams: output word w of stream (seed, counter) is a
// pure function of its arguments, so any worker can produce any sample and
// results never depend on the thread count.

#pragma once

#include <cstdint>

namespace cantor {

namespace rng {

/// SplitMix64 finalizer (Steele, Lea, Flood 2014); bijective on 64 bits.
inline std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// w-th 64-bit word of the stream identified by (seed, counter).
inline std::uint64_t word(std::uint64_t seed, std::uint64_t counter, std::uint64_t w = 0) {
    return mix(mix(seed ^ 0x6a09e667f3bcc909ULL) + mix(counter) + w * 0x9e3779b97f4a7c15ULL);
}

/// Uniform double in [0, 1) from the top 53 bits.
inline double uniform01(std::uint64_t seed, std::uint64_t counter, std::uint64_t w = 0) {
    return static_cast<double>(word(seed, counter, w) >> 11) * 0x1.0p-53;
}

}  // namespace rng

}  // namespace cantor
