#pragma once

// Exact-rational convolution oracle for small key spaces (M <= 16). Lives in
// test code only; the library path it checks works in doubles.

#include <cmath>
#include <initializer_list>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "keyfuse/kft.hpp"

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::rational<BigInt>;
using RatDist = std::vector<Rat>;

inline Rat rat(long long num, long long den = 1) { return Rat(BigInt(num), BigInt(den)); }

inline double to_double(const Rat& r) {
    return r.numerator().convert_to<double>() / r.denominator().convert_to<double>();
}

inline RatDist point_mass(std::size_t size, std::size_t v) {
    RatDist d(size, rat(0));
    d[v] = rat(1);
    return d;
}

inline RatDist uniform(std::size_t size) {
    return RatDist(size, Rat(BigInt(1), BigInt(size)));
}

inline RatDist fuse(const keyfuse::KftSpec& k, const RatDist& a, const RatDist& b) {
    RatDist out(a.size(), rat(0));
    for (std::size_t u = 0; u < a.size(); ++u) {
        for (std::size_t v = 0; v < b.size(); ++v) {
            out[k.apply(u, v)] += a[u] * b[v];
        }
    }
    return out;
}

inline RatDist fuse_many(const keyfuse::KftSpec& k, const std::vector<RatDist>& ds) {
    RatDist acc = ds.front();
    for (std::size_t i = 1; i < ds.size(); ++i) {
        acc = fuse(k, acc, ds[i]);
    }
    return acc;
}

inline double min_entropy(const RatDist& d) {
    Rat max = d.front();
    for (const Rat& p : d) {
        if (max < p) {
            max = p;
        }
    }
    return -std::log2(to_double(max));
}

inline double shannon_entropy(const RatDist& d) {
    double h = 0.0;
    for (const Rat& p : d) {
        if (p > rat(0)) {
            const double x = to_double(p);
            h -= x * std::log2(x);
        }
    }
    return h;
}

inline keyfuse::KeyDistribution to_key_distribution(const keyfuse::KeySpace& space,
                                                    const RatDist& d) {
    std::vector<double> probs;
    probs.reserve(d.size());
    for (const Rat& p : d) {
        probs.push_back(to_double(p));
    }
    return keyfuse::KeyDistribution(space, std::move(probs));
}

// The 2-bit toy distributions: k_A and k_C random, k_B leaked at value 3.
inline RatDist paper_k_a() { return {rat(1, 3), rat(1, 4), rat(1, 6), rat(1, 4)}; }
inline RatDist paper_k_b() { return {rat(0), rat(0), rat(0), rat(1)}; }
inline RatDist paper_k_c() { return {rat(1, 2), rat(1, 5), rat(1, 6), rat(2, 15)}; }

} // namespace oracle
