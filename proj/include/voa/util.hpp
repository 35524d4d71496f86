#pragma once

// Seeded deterministic sampling used by every randomized search. Seeds are
// echoed into reports so runs are reproducible.

#include <cstdint>

#include "voa/core.hpp"

namespace voa {

// knobs for every seeded search; seeds are echoed into reports
struct SearchParams {
    std::uint64_t seed = 1;
    int samples = 32;
};

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // integer in [lo, hi]
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

// random vector with coordinates in {-2..2}
inline Vec random_small_vec(SplitMix64& rng, std::size_t n) {
    Vec v = zero_vec(n);
    for (auto& x : v) x = Rational(rng.range(-2, 2));
    return v;
}

inline GradedVector random_graded_vector(SplitMix64& rng, const TruncatedVOA& V) {
    GradedVector g;
    for (auto wi : V.basis()) g.set(wi, Rational(rng.range(-2, 2)));
    return g;
}

}  // namespace voa
