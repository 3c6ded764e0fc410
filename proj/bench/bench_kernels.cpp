// Timing comparison of the OpenMP kernels against their serial references:
// the dense O(M^2) fusion pushforward and the Monte Carlo session estimator.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include <omp.h>

#include "keyfuse/exposure_sim.hpp"
#include "keyfuse/kft.hpp"

using namespace keyfuse;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

KeyDistribution random_dist(const KeySpace& s, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> p(s.size());
    double sum = 0.0;
    for (auto& x : p) {
        x = unit(rng);
        sum += x;
    }
    for (auto& x : p) {
        x /= sum;
    }
    return KeyDistribution(s, std::move(p));
}

void bench_fuse(int bits, std::mt19937_64& rng) {
    const KeySpace s(bits);
    const auto kft = KftSpec::make_xor(s);
    const auto a = random_dist(s, rng);
    const auto b = random_dist(s, rng);

    auto t0 = std::chrono::steady_clock::now();
    const auto serial = fuse_dist_serial(kft, a, b);
    const double serial_s = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    const auto parallel = fuse_dist(kft, a, b);
    const double parallel_s = seconds_since(t0);

    double worst = 0.0;
    for (std::size_t i = 0; i < serial.probs().size(); ++i) {
        worst = std::max(worst, std::abs(serial.probs()[i] - parallel.probs()[i]));
    }
    std::printf("fuse_dist      n=%2d (M=%7llu)   serial %8.1f ms   openmp %8.1f ms   "
                "speedup %.2fx   max|diff| %.1e\n",
                bits, static_cast<unsigned long long>(s.size()), serial_s * 1e3, parallel_s * 1e3,
                serial_s / parallel_s, worst);
}

void bench_simulate(std::int64_t trials) {
    SessionConfig cfg;
    cfg.message_count = 60;
    cfg.window_size = 3;
    cfg.exposure = ExposureModel(0.3);
    cfg.seed = 42;
    cfg.trials = trials;

    auto t0 = std::chrono::steady_clock::now();
    const auto serial = simulate_session_serial(cfg);
    const double serial_s = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    const auto parallel = simulate_session(cfg);
    const double parallel_s = seconds_since(t0);

    std::printf("simulate       trials=%-9lld   serial %8.1f ms   openmp %8.1f ms   "
                "speedup %.2fx   identical %s\n",
                static_cast<long long>(trials), serial_s * 1e3, parallel_s * 1e3,
                serial_s / parallel_s, parallel.compromised == serial.compromised ? "yes" : "NO");
}

} // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());
    std::mt19937_64 rng(1);
    for (int bits : {10, 11, 12}) {
        bench_fuse(bits, rng);
    }
    for (std::int64_t trials : {200000LL, 1000000LL}) {
        bench_simulate(trials);
    }
    return 0;
}
