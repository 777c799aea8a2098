#ifndef TAXSIM_RNG_HPP
#define TAXSIM_RNG_HPP

#include <cstdint>

namespace taxsim {

/// SplitMix64 generator. The exact update sequence is part of the output
/// contract: identical seeds must reproduce identical fields on every
/// platform, so no std::random engine is used here.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0,1) with 53 random bits.
    double next_uniform() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

} // namespace taxsim

#endif
