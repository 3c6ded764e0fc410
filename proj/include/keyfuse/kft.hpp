#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "keyfuse/keyspace.hpp"

namespace keyfuse {

enum class KftKind {
    Xor,     // bitwise exclusive-or
    AddMod,  // addition modulo M
    SubMod,  // subtraction modulo M (a Latin square that is not commutative)
    Permuted // a base kind followed by a fixed permutation of the key space
};

/// A key-fusing transformation: a binary operation op(a, b) on the key space
/// that is bijective in each argument (its table is a Latin square). Fusing
/// independent keys through such an operation never lowers min-entropy below
/// the best input.
class KftSpec {
public:
    static KftSpec make_xor(const KeySpace& space);
    static KftSpec make_add_mod(const KeySpace& space);
    static KftSpec make_sub_mod(const KeySpace& space);

    /// op(a, b) = perm[base(a, b)]. The permutation must be a bijection on
    /// [0, M); base must not itself be Permuted.
    static KftSpec make_permuted(const KeySpace& space, KftKind base, std::vector<KeyValue> perm);

    const KeySpace& space() const { return space_; }
    KftKind kind() const { return kind_; }
    KftKind base_kind() const { return base_; }
    const std::vector<KeyValue>& permutation() const { return perm_; }

    /// op(a, b). Operands must lie in [0, M).
    KeyValue apply(KeyValue a, KeyValue b) const;

    /// The unique b with apply(a, b) = out. Exists because each row of the
    /// table is a bijection.
    KeyValue solve_second(KeyValue a, KeyValue out) const;

private:
    KftSpec(const KeySpace& space, KftKind kind, KftKind base, std::vector<KeyValue> perm,
            std::vector<KeyValue> inv_perm);

    KeySpace space_;
    KftKind kind_;
    KftKind base_;                  // meaningful only for Permuted
    std::vector<KeyValue> perm_;    // empty unless Permuted
    std::vector<KeyValue> inv_perm_;
};

/// Exact pushforward of two independent keys through the transformation:
/// out[o] = sum over op(u, v) = o of a[u] * b[v]. O(M^2), OpenMP over output
/// cells; bit-identical for any thread count.
KeyDistribution fuse_dist(const KftSpec& k, const KeyDistribution& a, const KeyDistribution& b);

/// Serial reference for fuse_dist: scatter accumulation over all (u, v)
/// pairs. Kept for tests and the kernel benchmark.
KeyDistribution fuse_dist_serial(const KftSpec& k, const KeyDistribution& a,
                                 const KeyDistribution& b);

/// Left fold of fuse_dist over one or more mutually independent keys.
/// A single-element list is returned unchanged.
KeyDistribution fuse_many(const KftSpec& k, std::span<const KeyDistribution> ds);

/// Value-level counterpart of fuse_many: the concrete key both sides compute
/// from the raw keys of one window. Strict left fold, so the fold order is
/// part of the shared protocol for non-associative instances.
KeyValue fuse_keys(const KftSpec& k, std::span<const KeyValue> vs);

/// Exhaustive row/column bijectivity scan of an arbitrary operation table.
bool is_latin_square(std::uint64_t size, const std::function<KeyValue(KeyValue, KeyValue)>& op);

/// Exhaustive Latin-square check of the transformation table. n <= 12.
bool verify_latin_square(const KftSpec& k);

struct KftLaws {
    bool commutative = false;
    bool associative = false;
};

/// Exact exhaustive determination over all pairs and triples. n <= 8.
KftLaws check_laws(const KftSpec& k);

/// Largest n for verify_latin_square (M^2 scan).
inline constexpr int kMaxLatinSquareBits = 12;
/// Largest n for check_laws (M^3 scan).
inline constexpr int kMaxLawCheckBits = 8;

} // namespace keyfuse
