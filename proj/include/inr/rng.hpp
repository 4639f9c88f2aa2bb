#pragma once

#include <cmath>
#include <cstdint>

#include "inr/common.hpp"

namespace inr {

/// Deterministic 64-bit-state generator (splitmix64, Vigna's reference
/// constants). The same seed yields the same sequence on every platform,
/// which keeps seeded experiments reproducible across machines.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : seed_(seed), state_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw in [lo, hi). 53-bit resolution.
    double uniform(double lo, double hi) {
        if (!(lo < hi)) throw ConfigError("uniform: lo must be < hi");
        double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
        double v = lo + u * (hi - lo);
        // rounding at the top of the interval may land exactly on hi
        if (v >= hi) v = std::nextafter(hi, lo);
        return v;
    }

private:
    std::uint64_t seed_;
    std::uint64_t state_;
};

}  // namespace inr
