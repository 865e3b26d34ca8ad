// SPDX-License-Identifier: MIT
//
// Deterministic random number generation.
//
// We use splitmix64 with an explicit uniform-double construction instead of
// <random> distributions: the standard does not pin down the exact stream of
// std::uniform_real_distribution, so results would differ across standard
// libraries.  Every randomized search and sampler in this project must be
// reproducible from a seed alone, on any platform.

#pragma once

#include <cstdint>

namespace kcm {

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1): 53 random mantissa bits.
    double uniform() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform();
    }

    // Uniform integer in [0, n), n > 0.  Simple rejection-free modulo is fine
    // here: n is always tiny compared to 2^64, bias is < n/2^64.
    std::uint64_t below(std::uint64_t n) {
        return next() % n;
    }
};

// Derive an independent per-item stream from a base seed, so that work items
// scheduled in parallel draw identical numbers regardless of thread count.
inline SplitMix64 stream_for(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mix(seed ^ (0x632be59bd9b4e019ULL * (index + 1)));
    mix.next();  // decorrelate trivially related seeds
    return mix;
}

} // namespace kcm
