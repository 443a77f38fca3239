// Acceptance suite: one line per criterion, nonzero exit on any failure.
//
// Each criterion re-derives its expected values through the library and
// asserts the pinned tolerances; timings are wall-clock bounds on this
// machine class. Criteria 1 and 3 assert the bundled reference rows
// exactly as listed, including two rows whose listed pair distances are
// internally inconsistent (see README); those two single-row mismatches
// are reported honestly as failures rather than patched.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "deephole/distance.hpp"
#include "deephole/parallel.hpp"
#include "deephole/report_json.hpp"
#include "deephole/tables.hpp"

using namespace deephole;

namespace {

constexpr uint64_t sample_seed = 20250810;

struct Criterion {
    int id;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct Check {
    bool ok = true;
    std::string why;

    void require(bool cond, const std::string& msg) {
        if (!cond && ok) {
            ok = false;
            why = msg;
        }
    }
};

std::string stripped(const json& j) { return strip_timing(j).dump(); }

Word random_word(const Field& f, SplitMix64& rng) {
    std::vector<uint32_t> e(f.q() - 1);
    for (auto& x : e) x = static_cast<uint32_t>(rng.below(f.q()));
    return Word(f, std::move(e));
}

Poly random_poly(const Field& f, uint32_t len, SplitMix64& rng) {
    std::vector<uint32_t> c(len);
    for (auto& x : c) x = static_cast<uint32_t>(rng.below(f.q()));
    return Poly(f, std::move(c));
}

// ---- criteria -------------------------------------------------------

void table1(Check& c) {
    TableReport r = reproduce_table(ReferenceTable::table1);
    c.require(r.rows.size() == 3, "expected 3 rows");
    for (size_t i = 0; i < r.rows.size(); ++i) {
        const auto& row = r.rows[i];
        std::string tag = "row " + std::to_string(i + 1);
        c.require(*row.interpolant_match, tag + ": interpolant mismatch");
        c.require(row.v_is_codeword, tag + ": listed v not a codeword");
        c.require(row.exact_distance < 5, tag + ": exact distance not < 5");
        c.require(row.d_u_v == 4, tag + ": d(u, listed v) = " + std::to_string(row.d_u_v) +
                                      ", required 4 (listed v duplicates row 3's)");
    }
}

void table2(Check& c) {
    TableReport r = reproduce_table(ReferenceTable::table2);
    c.require(r.rows.size() == 4, "expected 4 rows");
    std::vector<uint32_t> want{4, 3, 3, 4};
    for (size_t i = 0; i < r.rows.size(); ++i) {
        c.require(*r.rows[i].weight == want[i],
                  "row " + std::to_string(i + 1) + ": weight mismatch");
        c.require(r.rows[i].exact_distance < 5,
                  "row " + std::to_string(i + 1) + ": exact distance not < 5");
        c.require(r.rows[i].exact_distance <= *r.rows[i].weight,
                  "row " + std::to_string(i + 1) + ": d(u,C) > w(u)");
    }
    c.require(r.pass, "table 2 reproduction flagged a row");
}

void table3(Check& c) {
    TableReport r = reproduce_table(ReferenceTable::table3);
    c.require(r.rows.size() == 6, "expected 6 rows");
    for (size_t i = 0; i < r.rows.size(); ++i) {
        const auto& row = r.rows[i];
        std::string tag = "row " + std::to_string(i + 1);
        c.require(row.v_is_codeword, tag + ": listed v not a codeword");
        c.require(row.exact_distance < 5, tag + ": exact distance not < 5");
        c.require(row.d_u_v == 4, tag + ": d(u, listed v) = " + std::to_string(row.d_u_v) +
                                      ", listed value is 4");
    }
    const auto& row4 = r.rows[3];
    c.require(row4.codeword_v == std::vector<uint32_t>(10, 0), "row 4: v is not the zero word");
    c.require(row4.d_u_v == 4 && row4.d_u_v == Word(Field(11), row4.received_word).weight(),
              "row 4: d(u, 0) != w(u) = 4");
}

void table4_and_e424(Check& c) {
    TableReport r4 = reproduce_table(ReferenceTable::table4);
    c.require(r4.rows.size() == 4, "expected 4 rows");
    std::vector<uint32_t> want{4, 4, 4, 3};
    for (size_t i = 0; i < r4.rows.size(); ++i) {
        c.require(r4.rows[i].d_u_v == want[i],
                  "row " + std::to_string(i + 1) + ": pair distance mismatch");
        c.require(r4.rows[i].exact_distance < 5,
                  "row " + std::to_string(i + 1) + ": exact distance not < 5");
    }
    c.require(r4.pass, "table 4 reproduction flagged a row");

    TableReport re = reproduce_table(ReferenceTable::example424);
    c.require(re.rows.size() == 1 && re.rows[0].d_u_v == 4, "e424 pair distance != 4");
    c.require(re.rows[0].exact_distance < 5, "e424 exact distance not < 5");
}

void theorem12_families(Check& c) {
    {
        Field f(5);
        VerificationSummary s = verify_theorem12(RSCode(f, 2));
        c.require(s.words_checked == 200, "GF(5): expected 200 words");
        c.require(s.expected_distance == 2 && s.passed(), "GF(5): failures found");
    }
    {
        Field f(7);
        auto start = std::chrono::steady_clock::now();
        VerificationSummary s = verify_theorem12(RSCode(f, 3));
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
        c.require(s.words_checked == 4116, "GF(7): expected 4116 words");
        c.require(s.expected_distance == 3 && s.passed(), "GF(7): failures found");
        c.require(secs < 30.0, "GF(7): exceeded 30 s");
    }
    {
        Field f(2, 3);
        VerificationSummary s = verify_theorem12(RSCode(f, 3));
        c.require(s.words_checked == 2 * 7 * 512, "GF(8): unexpected word count");
        c.require(s.expected_distance == 4 && s.passed(), "GF(8): failures found");
    }
    {
        Field f(3, 2);
        VerificationSummary s = verify_theorem12_sampled(RSCode(f, 4), 500, sample_seed);
        c.require(s.words_checked == 500, "GF(9): expected 500 samples");
        c.require(s.expected_distance == 4 && s.passed(), "GF(9): failures found");
    }
}

void prime_field_nontrivial_deep_hole(Check& c) {
    // q = 7 prime, k = 3: the word of x^5 has interpolant degree 5 != k
    // yet exact distance n-k, a deep hole outside the degree-k family
    Field f(7);
    RSCode code(f, 3);
    Word u = Poly::monomial(f, 5).eval_word();
    c.require(degree_of_word(u) == 5, "interpolant degree is not 5");
    DistanceReport rep = error_distance_exact(code, u);
    c.require(rep.distance == 3, "exact distance != n-k = 3");
    c.require(rep.is_deep_hole, "not flagged as deep hole");
}

void cyclic_families(Check& c) {
    {
        Field f(11);
        CyclicRSCode code(f, 5);
        SplitMix64 rng(sample_seed);
        struct Case { DeepHoleShape shape; uint32_t a; uint64_t tail; };
        std::vector<Case> cases;
        for (auto shape : {DeepHoleShape::cyclic_g1, DeepHoleShape::cyclic_g2})
            for (int i = 0; i < 100; ++i)
                cases.push_back({shape, static_cast<uint32_t>(1 + rng.below(10)),
                                 rng.below(161051)});
        std::vector<uint8_t> ok(cases.size(), 0);
        parallel_chunks(cases.size(), resolve_workers(0),
                        [&](unsigned, uint64_t b, uint64_t e) {
                            for (uint64_t i = b; i < e; ++i) {
                                Poly tail(f, {});
                                tail = code.message(cases[i].tail);
                                Poly u = construct_cyclic_deep_hole(
                                    code, {cases[i].shape, cases[i].a, tail});
                                ok[i] = error_distance_exact(code, u, {1, false}).distance == 5;
                            }
                        });
        for (size_t i = 0; i < cases.size(); ++i)
            c.require(ok[i], "GF(11) pair " + std::to_string(i) + " distance != 5");
    }
    {
        Field f(5);
        CyclicRSCode code(f, 2);
        for (auto shape : {DeepHoleShape::cyclic_g1, DeepHoleShape::cyclic_g2})
            for (uint32_t a = 1; a < 5; ++a)
                for (uint64_t t = 0; t < 25; ++t) {
                    Poly u = construct_cyclic_deep_hole(code, {shape, a, code.message(t)});
                    c.require(error_distance_exact(code, u).distance == 2,
                              "GF(5) cyclic member not at distance 2");
                }
    }
}

void bch_bound(Check& c) {
    // every nonzero multiple of g1 of degree <= q-2 has weight >= d-1 = 5
    Field f(11);
    CyclicRSCode code(f, 5);
    const auto& g1 = code.g1().coeffs();  // degree 4, so multipliers run to degree 5
    const uint32_t mlen = 6;
    uint64_t total = 1;
    for (uint32_t i = 0; i < mlen; ++i) total *= 11;

    auto start = std::chrono::steady_clock::now();
    std::vector<uint64_t> bad_count(resolve_workers(0), 0);
    parallel_chunks(total - 1, resolve_workers(0), [&](unsigned w, uint64_t b, uint64_t e) {
        uint32_t m[mlen], prod[10];
        for (uint64_t idx = b; idx < e; ++idx) {
            uint64_t t = idx + 1;  // skip the zero multiplier
            for (uint32_t j = 0; j < mlen; ++j) { m[j] = t % 11; t /= 11; }
            for (auto& x : prod) x = 0;
            for (uint32_t i = 0; i < mlen; ++i) {
                if (m[i] == 0) continue;
                for (uint32_t j = 0; j < g1.size(); ++j)
                    if (g1[j] != 0)
                        prod[i + j] = f.add(prod[i + j], f.mul_nonzero(m[i], g1[j]));
            }
            uint32_t weight = 0;
            for (uint32_t x : prod) weight += x != 0;
            if (weight < 5) ++bad_count[w];
        }
    });
    uint64_t bad = 0;
    for (uint64_t b : bad_count) bad += b;
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.require(bad == 0, std::to_string(bad) + " multiples below weight 5");
    c.require(secs < 10.0, "exceeded 10 s");
}

void mds_distances(Check& c) {
    struct Case { uint32_t p, m, k; };
    for (auto [p, m, k] : std::vector<Case>{{5, 1, 2}, {7, 1, 3}, {2, 3, 3}, {3, 2, 4}, {11, 1, 5}}) {
        Field f(p, m);
        RSCode code(f, k);
        uint32_t got = code.minimum_distance(DistanceMethod::exhaustive);
        c.require(got == code.n() - k + 1,
                  "GF(" + std::to_string(f.q()) + ") k=" + std::to_string(k) + ": exhaustive " +
                      std::to_string(got) + " != formula");
    }
}

void transform_properties(Check& c) {
    struct Case { uint32_t p, m, k; };
    for (auto [p, m, k] : std::vector<Case>{{2, 2, 2}, {7, 1, 3}, {3, 2, 4}, {11, 1, 5}}) {
        Field f(p, m);
        SplitMix64 rng(sample_seed + f.q());
        std::string fq = "GF(" + std::to_string(f.q()) + "): ";

        for (int trial = 0; trial < 10000; ++trial) {
            Word v = random_word(f, rng);
            if (idft(dft(v)) != v) { c.require(false, fq + "round trip failed"); return; }
            Word w = random_word(f, rng);
            uint32_t lam = static_cast<uint32_t>(rng.below(f.q()));
            uint32_t mu = static_cast<uint32_t>(rng.below(f.q()));
            auto scale = [&](const Word& x, uint32_t s) {
                std::vector<uint32_t> out(x.size());
                for (size_t i = 0; i < x.size(); ++i) out[i] = f.mul(s, x[i]);
                return Word(f, std::move(out));
            };
            if (dft(scale(v, lam) + scale(w, mu)) != scale(dft(v), lam) + scale(dft(w), mu)) {
                c.require(false, fq + "linearity failed");
                return;
            }
        }

        for (int trial = 0; trial < 10000; ++trial) {
            Poly s = random_poly(f, f.q() - 1, rng), t = random_poly(f, f.q() - 1, rng);
            auto [lhs, rhs] = distance_preservation_check(s, t);
            if (lhs != rhs) { c.require(false, fq + "distance preservation failed"); return; }
        }

        CyclicRSCode code(f, k);
        for (int trial = 0; trial < 1000; ++trial) {
            Poly tail = random_poly(f, k, rng);
            uint32_t a = static_cast<uint32_t>(1 + rng.below(f.q() - 1));
            uint32_t deg = (trial % 2 == 0 || k == f.q() - 2) ? f.q() - 2 : k;
            Poly u = tail + Poly::monomial(f, deg, a);
            DeepHoleImage img = deep_hole_image(code, u);
            const Poly& center = img.which == DeepHoleCenter::g1 ? code.g1() : code.g2();
            if (center.scaled(img.a) + img.l * code.g() != dft_poly(u)) {
                c.require(false, fq + "image decomposition failed");
                return;
            }
        }
    }

    // forward/backward image exhaustively over GF(5), k=2
    Field f5(5);
    CyclicRSCode code5(f5, 2);
    std::vector<std::string> images, multiples;
    for (uint64_t idx = 0; idx < 25; ++idx) {
        Poly s = code5.message(idx);
        images.push_back(dft_poly(s).str());
        multiples.push_back((code5.message(idx) * code5.g()).str());
        Poly back = cyclic_to_poly(code5, code5.message(idx));
        c.require(poly_to_cyclic(code5, back) == code5.message(idx),
                  "GF(5): correspondence does not invert");
    }
    std::sort(images.begin(), images.end());
    std::sort(multiples.begin(), multiples.end());
    c.require(images == multiples, "GF(5): image set differs from the code");
}

void cross_version_agreement(Check& c) {
    {
        Field f(5);
        RSCode eval_code(f, 2);
        CyclicRSCode cyc(f, 2);
        for (uint64_t idx = 0; idx < 625; ++idx) {
            std::vector<uint32_t> e(4);
            uint64_t t = idx;
            for (auto& x : e) { x = t % 5; t /= 5; }
            Word u(f, std::move(e));
            uint32_t d1 = error_distance_exact(eval_code, u).distance;
            uint32_t d2 =
                error_distance_exact(cyc, dft_poly(lagrange_interpolate(u))).distance;
            if (d1 != d2) {
                c.require(false, "GF(5) word " + std::to_string(idx) + ": " +
                                     std::to_string(d1) + " vs " + std::to_string(d2));
                return;
            }
        }
    }
    {
        Field f(11);
        RSCode eval_code(f, 5);
        CyclicRSCode cyc(f, 5);
        SplitMix64 rng(sample_seed);
        std::vector<Word> words;
        for (int i = 0; i < 1000; ++i) words.push_back(random_word(f, rng));
        std::vector<uint8_t> ok(words.size(), 0);
        parallel_chunks(words.size(), resolve_workers(0),
                        [&](unsigned, uint64_t b, uint64_t e) {
                            for (uint64_t i = b; i < e; ++i) {
                                uint32_t d1 =
                                    error_distance_exact(eval_code, words[i], {1, false})
                                        .distance;
                                uint32_t d2 =
                                    error_distance_exact(
                                        cyc, dft_poly(lagrange_interpolate(words[i])),
                                        {1, false})
                                        .distance;
                                ok[i] = d1 == d2;
                            }
                        });
        for (size_t i = 0; i < words.size(); ++i)
            c.require(ok[i], "GF(11) random word " + std::to_string(i) + " disagrees");
    }
}

void census(Check& c) {
    struct Case { uint32_t q, k; uint64_t cosets; };
    for (auto [q, k, cosets] : std::vector<Case>{{5, 2, 25}, {7, 3, 343}}) {
        Field f(q);
        RSCode code(f, k);
        std::string fq = "GF(" + std::to_string(q) + "): ";
        CensusReport base = census_conjecture43(code, {1, false});
        c.require(base.cosets_total == cosets, fq + "unexpected coset count");
        c.require(base.cosets_scanned + base.cosets_excluded == cosets, fq + "incomplete scan");
        c.require(base.odd_characteristic, fq + "parity flag wrong");
        for (const auto& h : base.deep_holes) {
            // a hit must carry a verified witness before it counts
            Word u = h.word;
            c.require(hamming_distance(u, h.nearest) == h.distance &&
                          h.distance == code.covering_radius() && code.is_codeword(h.nearest),
                      fq + "unverified census hit");
        }
        c.require(base.deep_holes.empty(), fq + std::to_string(base.deep_holes.size()) +
                                               " deep holes outside the known families");
        std::string want = stripped(to_json(base));
        for (unsigned w : {2u, 8u}) {
            CensusReport again = census_conjecture43(code, {w, false});
            c.require(stripped(to_json(again)) == want,
                      fq + "report differs with " + std::to_string(w) + " workers");
        }
    }
}

void determinism(Check& c) {
    Field f11(11);
    RSCode code11(f11, 5);
    Word e424(f11, {9, 10, 4, 9, 10, 0, 0, 0, 0, 0});
    Field f5(5);
    RSCode code5(f5, 2);
    Field f9(3, 2);
    RSCode code9(f9, 4);

    std::vector<std::pair<std::string, std::function<std::string(unsigned)>>> reports = {
        {"distance", [&](unsigned w) {
             return stripped(to_json(error_distance_exact(code11, e424, {w, false})));
         }},
        {"verify-exhaustive", [&](unsigned w) {
             return stripped(to_json(verify_theorem12(code5, {w, false})));
         }},
        {"verify-sampled", [&](unsigned w) {
             return stripped(to_json(verify_theorem12_sampled(code9, 500, sample_seed, {w, false})));
         }},
        {"census", [&](unsigned w) {
             return stripped(to_json(census_conjecture43(code5, {w, false})));
         }},
        {"tables", [&](unsigned w) {
             std::string all;
             for (auto t : {ReferenceTable::table1, ReferenceTable::table2,
                            ReferenceTable::table3, ReferenceTable::table4,
                            ReferenceTable::example424})
                 all += stripped(to_json(reproduce_table(t, {w, false})));
             return all;
         }},
    };
    for (auto& [name, render] : reports) {
        std::string base = render(1);
        for (unsigned w : {2u, 8u})
            c.require(render(w) == base,
                      name + " differs between 1 and " + std::to_string(w) + " workers");
    }
}

}  // namespace

int main() {
    std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
        {"table 1 reproduction (interpolants, v membership, pair distances, exact < 5)", table1},
        {"table 2 reproduction (weights 4,3,3,4; exact < 5)", table2},
        {"table 3 reproduction (pair distances, zero-word row, exact < 5)", table3},
        {"table 4 + e424 reproduction (distances 4,4,4,3 and 4; exact < 5)", table4_and_e424},
        {"family verification: GF(5),GF(7),GF(8) exhaustive; GF(9) 500 samples", theorem12_families},
        {"non-trivial deep hole over a prime field (GF(7), k=3, degree 5)", prime_field_nontrivial_deep_hole},
        {"cyclic families: GF(11) 100 random pairs per center; GF(5) exhaustive", cyclic_families},
        {"designed-distance bound: multiples of g1 over GF(11) have weight >= 5", bch_bound},
        {"MDS: exhaustive minimum distance equals n-k+1 at five sizes", mds_distances},
        {"transform properties: round trips, linearity, preservation, images", transform_properties},
        {"cross-version distance agreement (GF(5) exhaustive, GF(11) 1000 words)", cross_version_agreement},
        {"census: GF(5) and GF(7) exhaustive coset scans, worker-count stable", census},
        {"determinism: reports byte-identical for 1, 2 and 8 workers", determinism},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        Check check;
        auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(check);
        } catch (const std::exception& e) {
            check.require(false, std::string("exception: ") + e.what());
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%2zu] %-75s %s  (%.2fs)%s%s\n", i + 1, criteria[i].first.c_str(),
                    check.ok ? "PASS" : "FAIL", secs, check.ok ? "" : "  -- ",
                    check.ok ? "" : check.why.c_str());
        if (!check.ok) ++failures;
    }
    if (failures)
        std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    else
        std::printf("all %zu criteria passed\n", criteria.size());
    return failures;
}
