#pragma once

#include <cstdint>
#include <random>

#include "gorenstein/field.hpp"

namespace gorenstein {

/// Seeded generator passed explicitly to every randomized operation.
/// Draws are portable across standard libraries: only raw mt19937_64
/// output is consumed, never a std::*_distribution.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Independent stream for (seed, index); used for per-trial substreams.
    static Rng substream(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound);
    Scalar uniform(const Field& f);
    Scalar uniform_nonzero(const Field& f);

private:
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace gorenstein
