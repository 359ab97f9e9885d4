#pragma once

#include "qhopf/element.hpp"

#include <cstdint>

namespace qhopf {

// Deterministic generator with a platform-independent stream, so seeded
// tests reproduce everywhere (the standard distributions do not promise
// cross-implementation stability).
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n), n > 0.
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    // Uniform in [lo, hi].
    int range(int lo, int hi) {
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

// A random necklace with at most max_edges letters; falls back to an
// idempotent when no closed walk of the drawn length shows up.
Necklace random_necklace(SplitMix64& rng, const DoubleQuiver& dq, int max_edges);

// Up to three factors within the edge budget.
NecklaceMonomial random_monomial(SplitMix64& rng, const DoubleQuiver& dq, int max_edges);

// One to three terms; coefficients are p/q h^k with |p|, q <= 8 and k <= 2.
SymLElement random_element(SplitMix64& rng, const DoubleQuiver& dq, int max_edges);

}  // namespace qhopf
