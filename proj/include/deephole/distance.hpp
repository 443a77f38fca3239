#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "deephole/dft.hpp"
#include "deephole/poly.hpp"
#include "deephole/rscode.hpp"

namespace deephole {

/// Result of exact maximum-likelihood decoding of a received word
/// against the evaluation code. `nearest` is the codeword achieving the
/// minimum, with ties broken by the smallest message index (messages
/// ordered as base-q integers, constant coefficient least significant),
/// so reports are reproducible across runs and worker counts.
/// lower_bound is n - deg(u) when k <= deg(u) <= n-1 and 0 otherwise;
/// upper_bound is the covering radius n-k.
struct DistanceReport {
    uint32_t distance = 0;
    Word nearest;
    uint64_t witness_message = 0;
    uint32_t lower_bound = 0;
    uint32_t upper_bound = 0;
    bool is_deep_hole = false;
    bool is_codeword = false;
    double elapsed_ms = 0.0;
};

/// Cyclic-version counterpart: distances are coefficient-vector
/// distances to the multiples of g.
struct CyclicDistanceReport {
    uint32_t distance = 0;
    Poly nearest;
    uint64_t witness_message = 0;
    uint32_t upper_bound = 0;
    bool is_deep_hole = false;
    bool is_codeword = false;
    double elapsed_ms = 0.0;
};

/// Exhaustive minimum over all q^k codewords. Requires q^k within the
/// search cap unless opt.force.
DistanceReport error_distance_exact(const RSCode& code, const Word& u,
                                    SearchOptions opt = {});
CyclicDistanceReport error_distance_exact(const CyclicRSCode& code, const Poly& u,
                                          SearchOptions opt = {});

/// (n - deg(u), n - k) for k <= deg(u) <= n-1; DegreeOutOfRange when
/// deg(u) <= k-1 (u is then a codeword and the sandwich is vacuous).
std::pair<uint32_t, uint32_t> lemma11_bounds(const RSCode& code, const Word& u);

enum class DeepHoleShape { monomial_high, monomial_k, cyclic_g1, cyclic_g2 };

/// One member of a deep-hole family: a nonzero leading scalar `a` and a
/// tail of degree <= k-1 (the f of the evaluation families, the l of
/// the cyclic ones).
struct DeepHoleFamily {
    DeepHoleShape shape = DeepHoleShape::monomial_high;
    uint32_t a = 1;
    Poly tail;

    DeepHoleFamily(DeepHoleShape s, uint32_t a_, Poly tail_)
        : shape(s), a(a_), tail(std::move(tail_)) {}
};

/// eval word of a*x^{q-2} + f or a*x^k + f. Requires q >= 4 and
/// 2 <= k <= q-2 (HypothesisViolated otherwise); the result has exact
/// error distance n-k.
Word construct_deep_hole(const RSCode& code, const DeepHoleFamily& family);

/// a*g1 + l*g or a*g2 + l*g; exact cyclic error distance n-k.
Poly construct_cyclic_deep_hole(const CyclicRSCode& code, const DeepHoleFamily& family);

/// (q-1) q^k, the count of words whose interpolant has degree exactly k.
uint64_t count_trivial_deep_holes(const RSCode& code);
/// 2 (q-1) q^k for k <= q-3, collapsing to (q-1) q^k when k = q-2 (the
/// two families coincide there).
uint64_t count_theorem12_deep_holes(const RSCode& code);

struct VerificationFailure {
    DeepHoleShape shape;
    uint32_t a;
    uint64_t tail_index;
    uint32_t distance;
};

struct VerificationSummary {
    uint32_t q = 0, k = 0;
    bool exhaustive = true;
    uint64_t samples = 0, seed = 0;
    uint64_t words_checked = 0;
    uint32_t expected_distance = 0;
    std::vector<VerificationFailure> failures;  // must stay empty
    double elapsed_ms = 0.0;
    bool passed() const { return failures.empty(); }
};

/// Checks that every word of both deep-hole shapes has exact error
/// distance n-k (one shape when k = q-2). The exhaustive mode walks all
/// of them; the sampled mode draws (shape, a, tail) uniformly from a
/// seeded generator.
VerificationSummary verify_theorem12(const RSCode& code, SearchOptions opt = {});
VerificationSummary verify_theorem12_sampled(const RSCode& code, uint64_t count,
                                             uint64_t seed, SearchOptions opt = {});

/// A deep hole found by the census outside the two known families.
struct CensusHit {
    std::vector<uint32_t> top_pattern;  // interpolant coefficients u_k..u_{q-2}
    Word word;
    uint32_t distance;
    Word nearest;
};

struct CensusReport {
    uint32_t q = 0, k = 0;
    bool odd_characteristic = false;
    bool exhaustive = true;
    uint64_t samples = 0, seed = 0;
    uint64_t cosets_total = 0;     // q^(q-1-k), one representative per coset
    uint64_t cosets_scanned = 0;
    uint64_t cosets_excluded = 0;  // representatives of the two known families
    std::vector<CensusHit> deep_holes;
    double elapsed_ms = 0.0;  // the one field determinism comparisons strip
};

/// Scans received words modulo codewords: since d(u+c, C) = d(u, C) for
/// codewords c, one representative per coset suffices, namely the
/// interpolant with zero low-degree part and top coefficients
/// (u_k, ..., u_{q-2}). Representatives whose top pattern is a single
/// nonzero u_{q-2} or a single nonzero u_k belong to the known families
/// and are excluded; every other representative gets an exact distance,
/// and any hit at distance n-k is reported as a counterexample witness.
CensusReport census_conjecture43(const RSCode& code, SearchOptions opt = {});
CensusReport census_conjecture43_sampled(const RSCode& code, uint64_t count,
                                         uint64_t seed, SearchOptions opt = {});

}  // namespace deephole
