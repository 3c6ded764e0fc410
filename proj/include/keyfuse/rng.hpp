#pragma once

#include <cstdint>

namespace keyfuse {

/// Finalizer from SplitMix64 (Steele, Lea, Flood 2014).
constexpr std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

/// SplitMix64 stream. Cheap, stateless to construct, good enough for
/// Bernoulli leak draws; not a cryptographic generator.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_);
    }

    /// Uniform double in [0, 1), 53 random bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

/// Counter-based per-trial stream: (seed, trial index) are mixed into an
/// independent starting state, so trials can run in any order or on any
/// number of workers and still draw identical values.
inline SplitMix64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
    return SplitMix64(mix64(seed ^ mix64(trial + 0x9e3779b97f4a7c15ULL)));
}

} // namespace keyfuse
