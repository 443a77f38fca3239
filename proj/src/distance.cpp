#include "deephole/distance.hpp"

#include <chrono>
#include <limits>

#include "scan.hpp"

namespace deephole {

namespace {

using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point start) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - start).count();
}

uint64_t checked_mul(uint64_t a, uint64_t b) {
    if (b != 0 && a > std::numeric_limits<uint64_t>::max() / b)
        throw std::overflow_error("deep-hole count overflows 64 bits");
    return a * b;
}

// scan for the bare distance, no report assembly; single-threaded
uint32_t exact_distance_value(const RSCode& code, std::span<const uint32_t> target) {
    return detail::scan_eval(code, target, false, 0, code.message_count()).distance;
}

std::vector<uint32_t> dense_coeffs(const Poly& p, uint32_t n) {
    std::vector<uint32_t> c(n, 0);
    for (uint32_t i = 0; i < n; ++i) c[i] = p.coeff(i);
    return c;
}

}  // namespace

DistanceReport error_distance_exact(const RSCode& code, const Word& u, SearchOptions opt) {
    require_same_field(code.field(), u.field());
    auto start = clock_type::now();
    uint64_t total = code.message_count();
    detail::require_within_cap(total, opt.force);

    auto best = detail::scan_parallel(total, opt.workers, [&](uint64_t b, uint64_t e) {
        return detail::scan_eval(code, u.entries(), false, b, e);
    });

    DistanceReport rep;
    rep.distance = best.distance;
    rep.witness_message = best.witness;
    rep.nearest = code.encode(code.message(best.witness));
    rep.upper_bound = code.covering_radius();
    auto deg = degree_of_word(u);
    rep.lower_bound =
        (deg && *deg >= static_cast<int>(code.k())) ? code.n() - static_cast<uint32_t>(*deg) : 0;
    rep.is_deep_hole = rep.distance == code.covering_radius();
    rep.is_codeword = rep.distance == 0;
    rep.elapsed_ms = ms_since(start);
    return rep;
}

CyclicDistanceReport error_distance_exact(const CyclicRSCode& code, const Poly& u,
                                          SearchOptions opt) {
    require_same_field(code.field(), u.field());
    if (u.degree() && *u.degree() > static_cast<int>(code.n()) - 1)
        throw DegreeTooHigh("received polynomial must have degree <= q-2");
    auto start = clock_type::now();
    uint64_t total = code.message_count();
    detail::require_within_cap(total, opt.force);

    std::vector<uint32_t> target = dense_coeffs(u, code.n());
    auto best = detail::scan_parallel(total, opt.workers, [&](uint64_t b, uint64_t e) {
        return detail::scan_cyclic(code, target, false, b, e);
    });

    CyclicDistanceReport rep;
    rep.distance = best.distance;
    rep.witness_message = best.witness;
    rep.nearest = code.encode(code.message(best.witness));
    rep.upper_bound = code.covering_radius();
    rep.is_deep_hole = rep.distance == code.covering_radius();
    rep.is_codeword = rep.distance == 0;
    rep.elapsed_ms = ms_since(start);
    return rep;
}

std::pair<uint32_t, uint32_t> lemma11_bounds(const RSCode& code, const Word& u) {
    require_same_field(code.field(), u.field());
    auto deg = degree_of_word(u);
    if (!deg || *deg < static_cast<int>(code.k()))
        throw DegreeOutOfRange("deg(u) <= k-1: u is a codeword, the bounds do not apply");
    return {code.n() - static_cast<uint32_t>(*deg), code.covering_radius()};
}

namespace {

void check_family_params(const Field& f, uint32_t k, const DeepHoleFamily& family) {
    if (family.a == 0 || family.a >= f.q())
        throw HypothesisViolated("family scalar a must be a nonzero field element");
    require_same_field(f, family.tail.field());
    if (family.tail.degree() && *family.tail.degree() > static_cast<int>(k) - 1)
        throw HypothesisViolated("family tail must have degree <= k-1");
}

}  // namespace

Word construct_deep_hole(const RSCode& code, const DeepHoleFamily& family) {
    const Field& f = code.field();
    if (f.q() < 4 || code.k() < 2 || code.k() > f.q() - 2)
        throw HypothesisViolated("deep-hole families need q >= 4 and 2 <= k <= q-2");
    check_family_params(f, code.k(), family);
    uint32_t deg;
    switch (family.shape) {
        case DeepHoleShape::monomial_high: deg = f.q() - 2; break;
        case DeepHoleShape::monomial_k: deg = code.k(); break;
        default:
            throw HypothesisViolated("cyclic shapes belong to construct_cyclic_deep_hole");
    }
    Poly u = family.tail + Poly::monomial(f, deg, family.a);
    return u.eval_word();
}

Poly construct_cyclic_deep_hole(const CyclicRSCode& code, const DeepHoleFamily& family) {
    const Field& f = code.field();
    check_family_params(f, code.k(), family);
    const Poly* center;
    switch (family.shape) {
        case DeepHoleShape::cyclic_g1: center = &code.g1(); break;
        case DeepHoleShape::cyclic_g2: center = &code.g2(); break;
        default:
            throw HypothesisViolated("evaluation shapes belong to construct_deep_hole");
    }
    return center->scaled(family.a) + family.tail * code.g();
}

uint64_t count_trivial_deep_holes(const RSCode& code) {
    uint64_t qk = 1;
    for (uint32_t i = 0; i < code.k(); ++i) qk = checked_mul(qk, code.field().q());
    return checked_mul(code.field().q() - 1, qk);
}

uint64_t count_theorem12_deep_holes(const RSCode& code) {
    uint64_t trivial = count_trivial_deep_holes(code);
    if (code.k() == code.field().q() - 2) return trivial;  // the families coincide
    return checked_mul(2, trivial);
}

namespace {

struct ShapedWord {
    DeepHoleShape shape;
    uint32_t a;
    uint64_t tail_index;
};

Word shaped_word(const RSCode& code, const ShapedWord& s) {
    const Field& f = code.field();
    uint32_t deg = s.shape == DeepHoleShape::monomial_high ? f.q() - 2 : code.k();
    Poly u = code.message(s.tail_index) + Poly::monomial(f, deg, s.a);
    return u.eval_word();
}

VerificationSummary run_verification(const RSCode& code, const std::vector<ShapedWord>* sampled,
                                     uint64_t seed, SearchOptions opt) {
    const Field& f = code.field();
    auto start = clock_type::now();

    uint64_t qk = code.message_count();
    uint64_t per_shape = detail::mul_saturating(f.q() - 1, qk);
    unsigned shapes = code.k() == f.q() - 2 ? 1 : 2;
    uint64_t total = sampled ? sampled->size() : detail::mul_saturating(per_shape, shapes);
    detail::require_within_cap(detail::mul_saturating(total, qk), opt.force);

    VerificationSummary summary;
    summary.q = f.q();
    summary.k = code.k();
    summary.exhaustive = sampled == nullptr;
    summary.samples = sampled ? sampled->size() : 0;
    summary.seed = seed;
    summary.expected_distance = code.covering_radius();
    summary.words_checked = total;

    unsigned workers = resolve_workers(opt.workers);
    std::vector<std::vector<VerificationFailure>> fails(workers);
    parallel_chunks(total, workers, [&](unsigned w, uint64_t begin, uint64_t end) {
        for (uint64_t idx = begin; idx < end; ++idx) {
            ShapedWord s;
            if (sampled) {
                s = (*sampled)[idx];
            } else {
                uint64_t rem = idx;
                s.shape = rem < per_shape ? DeepHoleShape::monomial_high
                                          : DeepHoleShape::monomial_k;
                rem %= per_shape;
                s.a = static_cast<uint32_t>(1 + rem / qk);
                s.tail_index = rem % qk;
            }
            Word u = shaped_word(code, s);
            uint32_t d = exact_distance_value(code, u.entries());
            if (d != summary.expected_distance)
                fails[w].push_back({s.shape, s.a, s.tail_index, d});
        }
    });
    for (auto& chunk : fails)
        summary.failures.insert(summary.failures.end(), chunk.begin(), chunk.end());
    summary.elapsed_ms = ms_since(start);
    return summary;
}

}  // namespace

VerificationSummary verify_theorem12(const RSCode& code, SearchOptions opt) {
    return run_verification(code, nullptr, 0, opt);
}

VerificationSummary verify_theorem12_sampled(const RSCode& code, uint64_t count,
                                             uint64_t seed, SearchOptions opt) {
    const Field& f = code.field();
    uint64_t qk = code.message_count();
    unsigned shapes = code.k() == f.q() - 2 ? 1 : 2;
    SplitMix64 rng(seed);
    std::vector<ShapedWord> sampled(count);
    for (auto& s : sampled) {
        s.shape = (shapes == 2 && rng.below(2) == 1) ? DeepHoleShape::monomial_k
                                                     : DeepHoleShape::monomial_high;
        s.a = static_cast<uint32_t>(1 + rng.below(f.q() - 1));
        s.tail_index = rng.below(qk);
    }
    return run_verification(code, &sampled, seed, opt);
}

namespace {

// top pattern = interpolant coefficients (u_k, ..., u_{q-2}) of the
// coset representative; patterns with a single nonzero coefficient at
// either end belong to the two known families
std::vector<uint32_t> pattern_of(uint64_t idx, uint32_t q, uint32_t len) {
    std::vector<uint32_t> p(len);
    for (uint32_t i = 0; i < len; ++i) {
        p[i] = static_cast<uint32_t>(idx % q);
        idx /= q;
    }
    return p;
}

bool known_family_pattern(const std::vector<uint32_t>& pat) {
    size_t nonzero = 0, where = 0;
    for (size_t i = 0; i < pat.size(); ++i) {
        if (pat[i] != 0) { ++nonzero; where = i; }
    }
    return nonzero == 1 && (where == 0 || where == pat.size() - 1);
}

CensusReport run_census(const RSCode& code, const std::vector<uint64_t>* sampled,
                        uint64_t seed, SearchOptions opt) {
    const Field& f = code.field();
    auto start = clock_type::now();
    uint32_t top_len = code.n() - code.k();
    uint64_t cosets = detail::pow_saturating(f.q(), top_len);
    uint64_t total = sampled ? sampled->size() : cosets;
    detail::require_within_cap(detail::mul_saturating(total, code.message_count()), opt.force);

    CensusReport report;
    report.q = f.q();
    report.k = code.k();
    report.odd_characteristic = f.p() % 2 == 1;
    report.exhaustive = sampled == nullptr;
    report.samples = sampled ? sampled->size() : 0;
    report.seed = seed;
    report.cosets_total = cosets;

    unsigned workers = resolve_workers(opt.workers);
    struct ChunkOut {
        uint64_t scanned = 0, excluded = 0;
        std::vector<CensusHit> hits;
    };
    std::vector<ChunkOut> outs(workers);
    parallel_chunks(total, workers, [&](unsigned w, uint64_t begin, uint64_t end) {
        for (uint64_t i = begin; i < end; ++i) {
            uint64_t pat_idx = sampled ? (*sampled)[i] : i;
            std::vector<uint32_t> pat = pattern_of(pat_idx, f.q(), top_len);
            if (known_family_pattern(pat)) {
                ++outs[w].excluded;
                continue;
            }
            ++outs[w].scanned;
            std::vector<uint32_t> coeffs(code.k(), 0);
            coeffs.insert(coeffs.end(), pat.begin(), pat.end());
            Word u = Poly(f, coeffs).eval_word();
            auto best = detail::scan_eval(code, u.entries(), false, 0, code.message_count());
            if (best.distance == code.covering_radius()) {
                CensusHit hit;
                hit.top_pattern = pat;
                hit.word = u;
                hit.distance = best.distance;
                hit.nearest = code.encode(code.message(best.witness));
                outs[w].hits.push_back(std::move(hit));
            }
        }
    });
    for (auto& o : outs) {
        report.cosets_scanned += o.scanned;
        report.cosets_excluded += o.excluded;
        report.deep_holes.insert(report.deep_holes.end(), o.hits.begin(), o.hits.end());
    }
    report.elapsed_ms = ms_since(start);
    return report;
}

}  // namespace

CensusReport census_conjecture43(const RSCode& code, SearchOptions opt) {
    return run_census(code, nullptr, 0, opt);
}

CensusReport census_conjecture43_sampled(const RSCode& code, uint64_t count, uint64_t seed,
                                         SearchOptions opt) {
    const Field& f = code.field();
    uint32_t top_len = code.n() - code.k();
    uint64_t cosets = detail::pow_saturating(f.q(), top_len);
    SplitMix64 rng(seed);
    std::vector<uint64_t> sampled(count);
    for (auto& s : sampled) s = rng.below(cosets);
    return run_census(code, &sampled, seed, opt);
}

}  // namespace deephole
