#pragma once

#include <cstdint>

#include "deephole/poly.hpp"

namespace deephole {

/// Options for exhaustive searches. workers == 0 means "use available
/// parallelism". The candidate cap (10^8 messages) is enforced unless
/// force is set. Results are bit-identical for any worker count.
struct SearchOptions {
    unsigned workers = 0;
    bool force = false;
};

/// Default cap on exhaustively scanned messages.
inline constexpr uint64_t search_cap = 100'000'000;

enum class DistanceMethod { formula, exhaustive };

/// The standard Reed-Solomon code in its polynomial-evaluation form:
/// codewords are (f(1), f(alpha), ..., f(alpha^{q-2})) for deg f <= k-1.
/// Length n = q-1, minimum distance n-k+1 (MDS), covering radius n-k.
class RSCode {
public:
    RSCode(const Field& field, uint32_t k);

    const Field& field() const { return *field_; }
    uint32_t k() const { return k_; }
    uint32_t n() const { return field_->q() - 1; }
    uint32_t covering_radius() const { return n() - k_; }

    Word encode(const Poly& message) const;
    bool is_codeword(const Word& w) const;

    /// q^k, saturating at UINT64_MAX on overflow.
    uint64_t message_count() const;
    /// Message with coefficient vector (c0,...,c_{k-1}) read off `index`
    /// as base-q digits, least significant first.
    Poly message(uint64_t index) const;

    /// formula: n-k+1. exhaustive: minimum weight over all nonzero
    /// codewords (must agree with the formula).
    uint32_t minimum_distance(DistanceMethod method, SearchOptions opt = {}) const;

private:
    const Field* field_;
    uint32_t k_;
};

/// The cyclic form: codewords are the multiples m(x) g(x) with
/// deg m <= k-1, where g has roots alpha, alpha^2, ..., alpha^{d-1} and
/// d = q-k. g1 = g/(x-alpha) and g2 = g/(x-alpha^{d-1}) are the centers
/// of the two cyclic deep-hole families.
class CyclicRSCode {
public:
    CyclicRSCode(const Field& field, uint32_t k);

    const Field& field() const { return *field_; }
    uint32_t k() const { return k_; }
    uint32_t n() const { return field_->q() - 1; }
    uint32_t d() const { return field_->q() - k_; }
    uint32_t covering_radius() const { return n() - k_; }

    const Poly& g() const { return g_; }
    const Poly& g1() const { return g1_; }
    const Poly& g2() const { return g2_; }

    Poly encode(const Poly& message) const;  // message * g
    bool is_codeword(const Poly& c) const;   // deg <= q-2 and g | c

    uint64_t message_count() const;
    Poly message(uint64_t index) const;

    uint32_t minimum_distance(DistanceMethod method, SearchOptions opt = {}) const;

private:
    const Field* field_;
    uint32_t k_;
    Poly g_, g1_, g2_;
};

/// True iff c vanishes at alpha^l, alpha^{l+1}, ..., alpha^{l+delta-2}.
/// With (l=2, delta=d-1) this is membership in the BCH code whose
/// designed-distance bound the cyclic deep-hole argument leans on:
/// every nonzero member has weight >= delta.
bool bch_designed_distance_check(const Field& field, const Poly& c,
                                 uint32_t l, uint32_t delta);

}  // namespace deephole
