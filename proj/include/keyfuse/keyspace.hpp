#pragma once

#include <cstdint>
#include <vector>

#include "keyfuse/errors.hpp"

namespace keyfuse {

using KeyValue = std::uint64_t;

/// An n-bit key space of M = 2^n values. Non-power-of-two moduli are not
/// representable by construction.
class KeySpace {
public:
    explicit KeySpace(int bits);

    int bits() const { return bits_; }
    std::uint64_t size() const { return std::uint64_t{1} << bits_; }

    /// Largest n for which a dense probability vector over 2^n doubles is
    /// materialized; larger keys are handled only by value-level operations.
    static constexpr int kMaxDistributionBits = 20;

    friend bool operator==(const KeySpace&, const KeySpace&) = default;

private:
    int bits_;
};

/// A key viewed as a random variable: a probability vector over the key
/// space. Immutable after construction; construction validates the vector.
class KeyDistribution {
public:
    KeyDistribution(const KeySpace& space, std::vector<double> probs);

    static KeyDistribution point_mass(const KeySpace& space, KeyValue v);
    static KeyDistribution uniform(const KeySpace& space);

    const KeySpace& space() const { return space_; }
    const std::vector<double>& probs() const { return probs_; }

    /// Absolute tolerance for the sum-to-one invariant.
    static constexpr double kSumTolerance = 1e-9;

private:
    KeySpace space_;
    std::vector<double> probs_;
};

/// An (n;l)-key-source: a key drawn from it counts as leaked exactly when
/// its min-entropy falls below the threshold l.
struct NlSource {
    NlSource(const KeySpace& space, double threshold_l);

    KeySpace space;
    double threshold_l;
};

/// Worst-case unpredictability, -log2(max probability), in bits.
double min_entropy(const KeyDistribution& d);

/// Average unpredictability, -sum p*log2(p), in bits. Zero-probability
/// entries contribute zero.
double shannon_entropy(const KeyDistribution& d);

/// True iff the key's min-entropy is below the source threshold.
bool is_leaked(const KeyDistribution& d, const NlSource& src);

} // namespace keyfuse
