#pragma once

#include <cstdint>

namespace fewleaf {

/// splitmix64: tiny deterministic generator. The standard <random>
/// distributions are implementation-defined, so everything seeded here stays
/// reproducible across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw in [0, bound); bound must be positive. The modulo
    /// bias is negligible for the small bounds used here.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    /// Bernoulli draw with probability num/den.
    bool chance(int num, int den) {
        return below(static_cast<std::uint64_t>(den)) < static_cast<std::uint64_t>(num);
    }

private:
    std::uint64_t state_;
};

}  // namespace fewleaf
