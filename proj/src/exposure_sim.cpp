#include "keyfuse/exposure_sim.hpp"

#include <cmath>
#include <string>

#include <omp.h>

#include "keyfuse/rng.hpp"

namespace keyfuse {

ExposureModel::ExposureModel(double p) : leak_probability(p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ValidationError("leak probability must lie in [0, 1], got " + std::to_string(p));
    }
}

void SessionConfig::validate() const {
    if (message_count < 1) {
        throw ValidationError("message count must be >= 1");
    }
    if (window_size < 1) {
        throw ValidationError("window size must be >= 1");
    }
    if (trials < 1) {
        throw ValidationError("trial count must be >= 1");
    }
    ExposureModel check(exposure.leak_probability);
    (void)check;
}

bool window_compromised(std::span<const std::uint8_t> leak_flags) {
    if (leak_flags.empty()) {
        throw ArgumentError("window_compromised needs at least one flag");
    }
    for (std::uint8_t f : leak_flags) {
        if (!f) {
            return false;
        }
    }
    return true;
}

namespace {

// One session: draw the leak flag of every raw key, then ask whether any
// message's whole window leaked. Pure in (cfg, trial index).
bool trial_compromised(const SessionConfig& cfg, std::int64_t trial) {
    SplitMix64 rng = trial_rng(cfg.seed, static_cast<std::uint64_t>(trial));
    const double p = cfg.exposure.leak_probability;
    const int w = cfg.fusing_enabled ? cfg.window_size : 1;
    const int k = cfg.message_count;

    if (cfg.policy == SimWindowPolicy::Sliding && cfg.fusing_enabled) {
        const int pool = k + w - 1;
        std::vector<std::uint8_t> leaked(static_cast<std::size_t>(pool));
        for (auto& f : leaked) {
            f = rng.next_unit() < p;
        }
        for (int i = 0; i < k; ++i) {
            bool all = true;
            for (int j = 0; j < w && all; ++j) {
                all = leaked[static_cast<std::size_t>(i + j)] != 0;
            }
            if (all) {
                return true;
            }
        }
        return false;
    }

    bool session_compromised = false;
    for (int i = 0; i < k; ++i) {
        bool all = true;
        for (int j = 0; j < w; ++j) {
            // Draw every key's flag even after the verdict is settled, so the
            // stream layout is independent of the outcome.
            const bool leak = rng.next_unit() < p;
            all = all && leak;
        }
        session_compromised = session_compromised || all;
    }
    return session_compromised;
}

SessionOutcome summarize(std::vector<std::uint8_t> flags, std::int64_t count) {
    SessionOutcome out;
    out.trials = static_cast<std::int64_t>(flags.size());
    out.compromised = std::move(flags);
    out.compromised_trials = count;
    out.estimate = static_cast<double>(count) / static_cast<double>(out.trials);
    out.std_error = std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(out.trials));
    return out;
}

} // namespace

SessionOutcome simulate_session(const SessionConfig& cfg, int workers) {
    cfg.validate();
    std::vector<std::uint8_t> flags(static_cast<std::size_t>(cfg.trials));
    std::int64_t count = 0;
    const int threads = workers > 0 ? workers : omp_get_max_threads();

#pragma omp parallel for schedule(static) num_threads(threads) reduction(+ : count)
    for (std::int64_t t = 0; t < cfg.trials; ++t) {
        const bool hit = trial_compromised(cfg, t);
        flags[static_cast<std::size_t>(t)] = hit ? 1 : 0;
        count += hit ? 1 : 0;
    }
    return summarize(std::move(flags), count);
}

SessionOutcome simulate_session_serial(const SessionConfig& cfg) {
    cfg.validate();
    std::vector<std::uint8_t> flags(static_cast<std::size_t>(cfg.trials));
    std::int64_t count = 0;
    for (std::int64_t t = 0; t < cfg.trials; ++t) {
        const bool hit = trial_compromised(cfg, t);
        flags[static_cast<std::size_t>(t)] = hit ? 1 : 0;
        count += hit ? 1 : 0;
    }
    return summarize(std::move(flags), count);
}

double fused_entropy_given_leaks(const KftSpec& k, std::span<const KeyDistribution> dists,
                                 std::span<const std::uint8_t> leaked,
                                 std::span<const KeyValue> leaked_values) {
    if (dists.empty()) {
        throw ArgumentError("fused_entropy_given_leaks needs at least one distribution");
    }
    if (leaked.size() != dists.size() || leaked_values.size() != dists.size()) {
        throw ArgumentError("leak flags and values must match the distribution count");
    }
    std::vector<KeyDistribution> adjusted;
    adjusted.reserve(dists.size());
    for (std::size_t i = 0; i < dists.size(); ++i) {
        if (dists[i].space() != k.space()) {
            throw DimensionError("distribution " + std::to_string(i) + " lives on a different key space");
        }
        if (leaked[i]) {
            adjusted.push_back(KeyDistribution::point_mass(k.space(), leaked_values[i]));
        } else {
            adjusted.push_back(dists[i]);
        }
    }
    return min_entropy(fuse_many(k, adjusted));
}

} // namespace keyfuse
