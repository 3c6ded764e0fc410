#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "keyfuse/keyspace.hpp"
#include "keyfuse/kft.hpp"

namespace keyfuse {

/// Ground-truth eavesdropper knowledge in the toy model: every raw key is
/// leaked independently with probability p.
struct ExposureModel {
    explicit ExposureModel(double leak_probability);

    double leak_probability;
};

/// How windows draw from the session's raw keys. Disjoint is the accepted
/// model (each message gets w fresh keys); Sliding is an experimental
/// variant where the K messages take overlapping windows [i, i+w) from a
/// pool of K+w-1 keys. Sliding is excluded from the acceptance numbers.
enum class SimWindowPolicy { Disjoint, Sliding };

struct SessionConfig {
    int message_count = 60;
    int window_size = 1;
    ExposureModel exposure{0.0};
    bool fusing_enabled = true;
    std::uint64_t seed = 0;
    std::int64_t trials = 1;
    SimWindowPolicy policy = SimWindowPolicy::Disjoint;

    void validate() const;
};

struct SessionOutcome {
    std::vector<std::uint8_t> compromised; // one flag per trial
    std::int64_t compromised_trials = 0;
    std::int64_t trials = 0;
    double estimate = 0.0;
    double std_error = 0.0;
};

/// True iff every key of the window is leaked: the only event that lets the
/// eavesdropper recover the fused key.
bool window_compromised(std::span<const std::uint8_t> leak_flags);

/// Monte Carlo estimate of the secret outage probability. Per-trial
/// randomness is counter-based, so the outcome is bit-identical for any
/// worker count. workers = 0 uses the OpenMP default.
SessionOutcome simulate_session(const SessionConfig& cfg, int workers = 0);

/// Plain-loop reference implementation of the same estimator; kept for
/// determinism tests and the kernel benchmark.
SessionOutcome simulate_session_serial(const SessionConfig& cfg);

/// Min-entropy of the fused key given which inputs the eavesdropper
/// learned: leaked inputs collapse to point masses at the observed values
/// before fusion.
double fused_entropy_given_leaks(const KftSpec& k, std::span<const KeyDistribution> dists,
                                 std::span<const std::uint8_t> leaked,
                                 std::span<const KeyValue> leaked_values);

} // namespace keyfuse
