#pragma once

#include <cstdint>

namespace tomoroute {

/// Small deterministic generator (splitmix64). Used wherever seeded
/// reproducibility is part of the contract; unlike the std distributions its
/// output stream is the same on every platform and standard library.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1).
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound) for bound > 0.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

/// Stateless mix of a seed and a stream index, for deriving independent
/// per-restart or per-trial seeds from one master seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 g(seed ^ (0xA0761D6478BD642Full * (stream + 1)));
    return g.next();
}

} // namespace tomoroute
