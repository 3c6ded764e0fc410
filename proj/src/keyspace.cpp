#include "keyfuse/keyspace.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace keyfuse {

KeySpace::KeySpace(int bits) : bits_(bits) {
    if (bits < 1 || bits > 63) {
        throw ValidationError("key space bits must be in [1, 63], got " + std::to_string(bits));
    }
}

namespace {

void require_distribution_space(const KeySpace& space) {
    if (space.bits() > KeySpace::kMaxDistributionBits) {
        throw CapacityError("dense distributions supported only up to n = " +
                            std::to_string(KeySpace::kMaxDistributionBits) + " bits, got n = " +
                            std::to_string(space.bits()));
    }
}

} // namespace

KeyDistribution::KeyDistribution(const KeySpace& space, std::vector<double> probs)
    : space_(space), probs_(std::move(probs)) {
    require_distribution_space(space_);
    if (probs_.size() != space_.size()) {
        throw ValidationError("probability vector has length " + std::to_string(probs_.size()) +
                              ", key space needs " + std::to_string(space_.size()));
    }
    double sum = 0.0;
    for (double p : probs_) {
        if (!(p >= 0.0)) {
            throw ValidationError("negative or NaN probability entry " + std::to_string(p));
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > kSumTolerance) {
        throw ValidationError("probabilities sum to " + std::to_string(sum) + ", expected 1");
    }
}

KeyDistribution KeyDistribution::point_mass(const KeySpace& space, KeyValue v) {
    require_distribution_space(space);
    if (v >= space.size()) {
        throw RangeError("key value " + std::to_string(v) + " outside [0, " +
                         std::to_string(space.size()) + ")");
    }
    std::vector<double> probs(space.size(), 0.0);
    probs[v] = 1.0;
    return KeyDistribution(space, std::move(probs));
}

KeyDistribution KeyDistribution::uniform(const KeySpace& space) {
    require_distribution_space(space);
    const double p = 1.0 / static_cast<double>(space.size());
    return KeyDistribution(space, std::vector<double>(space.size(), p));
}

NlSource::NlSource(const KeySpace& space_, double threshold_l_)
    : space(space_), threshold_l(threshold_l_) {
    if (!(threshold_l > 0.0) || threshold_l > static_cast<double>(space.bits())) {
        throw ValidationError("threshold l must lie in (0, n], got " + std::to_string(threshold_l));
    }
}

double min_entropy(const KeyDistribution& d) {
    const double max_p = *std::max_element(d.probs().begin(), d.probs().end());
    // max_p is within validation tolerance of [1/M, 1]; clamp the result to [0, n].
    const double h = -std::log2(max_p);
    return std::clamp(h, 0.0, static_cast<double>(d.space().bits()));
}

double shannon_entropy(const KeyDistribution& d) {
    double h = 0.0;
    for (double p : d.probs()) {
        if (p > 0.0) {
            h -= p * std::log2(p);
        }
    }
    return std::max(h, 0.0);
}

bool is_leaked(const KeyDistribution& d, const NlSource& src) {
    if (d.space() != src.space) {
        throw DimensionError("distribution and source live on different key spaces");
    }
    return min_entropy(d) < src.threshold_l;
}

} // namespace keyfuse
