#pragma once

#include <cstdint>
#include <random>

namespace gqs {

// splitmix64 finalizer; used to derive independent per-task streams so that
// sampled sweeps are reproducible for any worker count.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::mt19937_64 task_rng(std::uint64_t seed, std::uint64_t task_index) {
    return std::mt19937_64(mix64(seed ^ mix64(task_index)));
}

// Uniform integer in [0, n) by rejection; avoids the implementation-defined
// std::uniform_int_distribution.
inline std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % n;
}

// Uniform in [0, 1) with 53 random bits.
inline double rng_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform in the wrapped phase interval (-1/2, 1/2].
inline double rng_theta(std::mt19937_64& rng) {
    return 0.5 - rng_unit(rng);
}

} // namespace gqs
