#pragma once

#include "ordwalk/ordinal.hpp"

#include <random>

namespace ordwalk {

// Deterministic draws of CNF ordinals: a fixed seed fully determines every
// sampled tuple, independent of platform library details.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t pick(std::uint64_t n) { return rng_() % n; } // n >= 1

    // Random ordinal < bound, built from terms w^e * c with e <= 3 and small
    // coefficients, rejection-sampled below the bound.
    Ordinal ordinal_below(const Ordinal& bound);

    OrdTuple nondecreasing_tuple(std::size_t len, const Ordinal& bound);
    OrdTuple strictly_increasing_tuple(std::size_t len, const Ordinal& bound);

private:
    std::mt19937_64 rng_;
};

} // namespace ordwalk
