#include "keyfuse/kft.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace keyfuse {

namespace {

void require_operand(const KeySpace& space, KeyValue v, const char* name) {
    if (v >= space.size()) {
        throw RangeError(std::string(name) + " = " + std::to_string(v) + " outside [0, " +
                         std::to_string(space.size()) + ")");
    }
}

void require_same_space(const KeySpace& a, const KeySpace& b) {
    if (a != b) {
        throw DimensionError("operands live on different key spaces (n = " +
                             std::to_string(a.bits()) + " vs n = " + std::to_string(b.bits()) + ")");
    }
}

KeyValue base_apply(KftKind kind, std::uint64_t mask, KeyValue a, KeyValue b) {
    switch (kind) {
    case KftKind::Xor:
        return a ^ b;
    case KftKind::AddMod:
        return (a + b) & mask;
    case KftKind::SubMod:
        return (a - b) & mask;
    default:
        throw ArgumentError("permuted base must be a plain kind");
    }
}

// The b with base(a, b) = out.
KeyValue base_solve_second(KftKind kind, std::uint64_t mask, KeyValue a, KeyValue out) {
    switch (kind) {
    case KftKind::Xor:
        return a ^ out;
    case KftKind::AddMod:
        return (out - a) & mask;
    case KftKind::SubMod:
        return (a - out) & mask;
    default:
        throw ArgumentError("permuted base must be a plain kind");
    }
}

} // namespace

KftSpec::KftSpec(const KeySpace& space, KftKind kind, KftKind base, std::vector<KeyValue> perm,
                 std::vector<KeyValue> inv_perm)
    : space_(space), kind_(kind), base_(base), perm_(std::move(perm)),
      inv_perm_(std::move(inv_perm)) {}

KftSpec KftSpec::make_xor(const KeySpace& space) {
    return KftSpec(space, KftKind::Xor, KftKind::Xor, {}, {});
}

KftSpec KftSpec::make_add_mod(const KeySpace& space) {
    return KftSpec(space, KftKind::AddMod, KftKind::AddMod, {}, {});
}

KftSpec KftSpec::make_sub_mod(const KeySpace& space) {
    return KftSpec(space, KftKind::SubMod, KftKind::SubMod, {}, {});
}

KftSpec KftSpec::make_permuted(const KeySpace& space, KftKind base, std::vector<KeyValue> perm) {
    if (base == KftKind::Permuted) {
        throw ArgumentError("permuted base must be a plain kind");
    }
    if (space.bits() > KeySpace::kMaxDistributionBits) {
        throw CapacityError("permuted transformations need a materialized table, n <= " +
                            std::to_string(KeySpace::kMaxDistributionBits));
    }
    const std::uint64_t m = space.size();
    if (perm.size() != m) {
        throw ValidationError("permutation has length " + std::to_string(perm.size()) +
                              ", key space needs " + std::to_string(m));
    }
    std::vector<KeyValue> inv(m, m); // m marks "unset"
    for (std::uint64_t i = 0; i < m; ++i) {
        const KeyValue img = perm[i];
        if (img >= m || inv[img] != m) {
            throw ValidationError("permutation is not a bijection on [0, M)");
        }
        inv[img] = i;
    }
    return KftSpec(space, KftKind::Permuted, base, std::move(perm), std::move(inv));
}

KeyValue KftSpec::apply(KeyValue a, KeyValue b) const {
    require_operand(space_, a, "a");
    require_operand(space_, b, "b");
    const std::uint64_t mask = space_.size() - 1;
    if (kind_ == KftKind::Permuted) {
        return perm_[base_apply(base_, mask, a, b)];
    }
    return base_apply(kind_, mask, a, b);
}

KeyValue KftSpec::solve_second(KeyValue a, KeyValue out) const {
    require_operand(space_, a, "a");
    require_operand(space_, out, "out");
    const std::uint64_t mask = space_.size() - 1;
    if (kind_ == KftKind::Permuted) {
        return base_solve_second(base_, mask, a, inv_perm_[out]);
    }
    return base_solve_second(kind_, mask, a, out);
}

KeyDistribution fuse_dist(const KftSpec& k, const KeyDistribution& a, const KeyDistribution& b) {
    require_same_space(k.space(), a.space());
    require_same_space(a.space(), b.space());
    const std::int64_t m = static_cast<std::int64_t>(k.space().size());
    const std::vector<double>& pa = a.probs();
    const std::vector<double>& pb = b.probs();
    std::vector<double> out(static_cast<std::size_t>(m), 0.0);

    // Each output cell is a full sum in a fixed order, so the result does not
    // depend on the thread count.
#pragma omp parallel for schedule(static)
    for (std::int64_t o = 0; o < m; ++o) {
        double acc = 0.0;
        for (std::int64_t u = 0; u < m; ++u) {
            const KeyValue v = k.solve_second(static_cast<KeyValue>(u), static_cast<KeyValue>(o));
            acc += pa[static_cast<std::size_t>(u)] * pb[v];
        }
        out[static_cast<std::size_t>(o)] = acc;
    }
    return KeyDistribution(k.space(), std::move(out));
}

KeyDistribution fuse_dist_serial(const KftSpec& k, const KeyDistribution& a,
                                 const KeyDistribution& b) {
    require_same_space(k.space(), a.space());
    require_same_space(a.space(), b.space());
    const std::uint64_t m = k.space().size();
    const std::vector<double>& pa = a.probs();
    const std::vector<double>& pb = b.probs();
    std::vector<double> out(m, 0.0);
    for (std::uint64_t u = 0; u < m; ++u) {
        if (pa[u] == 0.0) {
            continue;
        }
        for (std::uint64_t v = 0; v < m; ++v) {
            out[k.apply(u, v)] += pa[u] * pb[v];
        }
    }
    return KeyDistribution(k.space(), std::move(out));
}

KeyDistribution fuse_many(const KftSpec& k, std::span<const KeyDistribution> ds) {
    if (ds.empty()) {
        throw ArgumentError("fuse_many needs at least one distribution");
    }
    KeyDistribution acc = ds[0];
    for (std::size_t i = 1; i < ds.size(); ++i) {
        acc = fuse_dist(k, acc, ds[i]);
    }
    return acc;
}

KeyValue fuse_keys(const KftSpec& k, std::span<const KeyValue> vs) {
    if (vs.empty()) {
        throw ArgumentError("fuse_keys needs at least one key");
    }
    KeyValue acc = vs[0];
    require_operand(k.space(), acc, "key");
    for (std::size_t i = 1; i < vs.size(); ++i) {
        acc = k.apply(acc, vs[i]);
    }
    return acc;
}

bool is_latin_square(std::uint64_t size, const std::function<KeyValue(KeyValue, KeyValue)>& op) {
    std::vector<char> seen(size);
    // Rows: for fixed a, b -> op(a, b) must be a bijection.
    for (std::uint64_t a = 0; a < size; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::uint64_t b = 0; b < size; ++b) {
            const KeyValue o = op(a, b);
            if (o >= size || seen[o]) {
                return false;
            }
            seen[o] = 1;
        }
    }
    // Columns: for fixed b, a -> op(a, b) must be a bijection.
    for (std::uint64_t b = 0; b < size; ++b) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::uint64_t a = 0; a < size; ++a) {
            const KeyValue o = op(a, b);
            if (o >= size || seen[o]) {
                return false;
            }
            seen[o] = 1;
        }
    }
    return true;
}

bool verify_latin_square(const KftSpec& k) {
    if (k.space().bits() > kMaxLatinSquareBits) {
        throw CapacityError("verify_latin_square supports n <= " +
                            std::to_string(kMaxLatinSquareBits));
    }
    return is_latin_square(k.space().size(),
                           [&k](KeyValue a, KeyValue b) { return k.apply(a, b); });
}

KftLaws check_laws(const KftSpec& k) {
    if (k.space().bits() > kMaxLawCheckBits) {
        throw CapacityError("check_laws supports n <= " + std::to_string(kMaxLawCheckBits));
    }
    const std::uint64_t m = k.space().size();
    KftLaws laws{true, true};
    for (std::uint64_t a = 0; a < m && laws.commutative; ++a) {
        for (std::uint64_t b = 0; b < m; ++b) {
            if (k.apply(a, b) != k.apply(b, a)) {
                laws.commutative = false;
                break;
            }
        }
    }
    for (std::uint64_t a = 0; a < m && laws.associative; ++a) {
        for (std::uint64_t b = 0; b < m && laws.associative; ++b) {
            const KeyValue ab = k.apply(a, b);
            for (std::uint64_t c = 0; c < m; ++c) {
                if (k.apply(ab, c) != k.apply(a, k.apply(b, c))) {
                    laws.associative = false;
                    break;
                }
            }
        }
    }
    return laws;
}

} // namespace keyfuse
