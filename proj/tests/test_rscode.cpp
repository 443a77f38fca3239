#include <doctest.h>

#include "deephole/parallel.hpp"
#include "deephole/rscode.hpp"
#include "oracles.hpp"

using namespace deephole;

TEST_CASE("evaluation encoding") {
    Field f(11);
    RSCode code(f, 5);
    CHECK(code.n() == 10);
    CHECK(code.covering_radius() == 5);

    // the degree <= 4 part of a received word's interpolant encodes to a
    // word differing from it exactly where the dropped x^7 term is nonzero
    Poly msg(f, {2, 10, 3, 2, 8});
    Word cw = code.encode(msg);
    Word u(f, {4, 9, 5, 1, 1, 0, 0, 0, 0, 0});
    Word x7 = Poly::monomial(f, 7).eval_word();
    for (uint32_t i = 0; i < 10; ++i) {
        CHECK((cw[i] != u[i]) == (x7[i] != 0));
        CHECK(x7[i] != 0);  // x^7 never vanishes on F_q^*
    }

    CHECK(code.encode(Poly(f)) == Word::zero(f));
    CHECK_THROWS_AS((void)code.encode(Poly::monomial(f, 5)), MessageDegreeTooHigh);

    // every encoding has interpolant degree <= 4
    SplitMix64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        Word w = code.encode(code.message(rng.below(code.message_count())));
        auto deg = degree_of_word(w);
        CHECK((!deg || *deg <= 4));
    }
}

TEST_CASE("membership") {
    Field f(11);
    RSCode code(f, 5);
    CHECK(code.is_codeword(Word(f, {0, 8, 7, 8, 8, 3, 0, 0, 0, 7})));
    CHECK(code.is_codeword(Word::zero(f)));
    CHECK_FALSE(code.is_codeword(Word(f, {8, 8, 7, 8, 1, 0, 0, 0, 0, 0})));
}

TEST_CASE("minimum distance") {
    Field f11(11);
    CHECK(RSCode(f11, 5).minimum_distance(DistanceMethod::formula) == 6);
    CHECK(RSCode(f11, 9).minimum_distance(DistanceMethod::formula) == 2);  // k = q-2

    Field f7(7);
    RSCode code(f7, 3);
    CHECK(code.minimum_distance(DistanceMethod::exhaustive) == 4);
    CHECK(code.minimum_distance(DistanceMethod::exhaustive) ==
          code.minimum_distance(DistanceMethod::formula));
    CHECK(oracles::naive_min_weight(code) == 4);

    CHECK_THROWS_AS((void)RSCode(f7, 1), HypothesisViolated);
    CHECK_THROWS_AS((void)RSCode(f7, 6), HypothesisViolated);
}

TEST_CASE("search cap") {
    Field f(13);
    RSCode code(f, 9);  // 13^9 ~ 1.06e10 messages
    CHECK_THROWS_AS((void)code.minimum_distance(DistanceMethod::exhaustive),
                    SearchSpaceTooLarge);
}

TEST_CASE("cyclic generator structure") {
    Field f(11);
    CyclicRSCode code(f, 5);
    CHECK(code.d() == 6);
    CHECK(code.g() == Poly(f, {1, 9, 2, 8, 4, 1}));
    CHECK(code.g1() == Poly(f, {5, 9, 9, 6, 1}));
    CHECK(code.g2() == Poly(f, {1, 8, 5, 3, 1}));
    CHECK(code.g1() * Poly(f, {f.neg(f.alpha_pow(1)), 1}) == code.g());
    CHECK(code.g2() * Poly(f, {f.neg(f.alpha_pow(code.d() - 1)), 1}) == code.g());

    // g vanishes at alpha..alpha^{d-1} and nowhere else on F_q^*
    for (uint32_t j = 0; j < 10; ++j)
        CHECK((code.g().eval(f.alpha_pow(j)) == 0) == (j >= 1 && j <= 5));
}

TEST_CASE("cyclic encoding and membership") {
    Field f(11);
    CyclicRSCode code(f, 5);
    CHECK(code.encode(Poly::constant(f, 1)) == code.g());
    CHECK(code.g().weight() <= code.d());
    CHECK(code.encode(Poly(f)).is_zero());
    CHECK(code.is_codeword(code.g()));
    CHECK(code.is_codeword(Poly(f)));
    CHECK_FALSE(code.is_codeword(code.g1()));
    CHECK_THROWS_AS((void)code.encode(Poly::monomial(f, 5)), MessageDegreeTooHigh);

    Field f5(5);
    CyclicRSCode small(f5, 2);
    CHECK(small.minimum_distance(DistanceMethod::exhaustive) == 3);  // n-k+1
}

TEST_CASE("mds property at several sizes") {
    for (auto [p, m, k] : std::vector<std::tuple<uint32_t, uint32_t, uint32_t>>{{5, 1, 2}, {7, 1, 3}, {2, 3, 3}}) {
        Field f(p, m);
        RSCode code(f, k);
        CHECK(code.minimum_distance(DistanceMethod::exhaustive) == code.n() - k + 1);
    }
}

TEST_CASE("bch designed distance check") {
    Field f(11);
    CyclicRSCode code(f, 5);
    CHECK(bch_designed_distance_check(f, code.g1(), 2, code.d() - 1));
    CHECK_FALSE(bch_designed_distance_check(f, Poly::constant(f, 1), 2, 2));
    CHECK_FALSE(bch_designed_distance_check(f, code.g2(), 2, code.d() - 1));

    // the bound itself at small scale: every nonzero multiple of g1 of
    // degree <= q-2 over GF(5), k=2 has weight >= d-1 = 2
    Field f5(5);
    CyclicRSCode c5(f5, 2);
    uint32_t maxdeg = 3;  // q-2
    uint32_t mdeg = maxdeg - (c5.d() - 2);
    uint64_t count = 1;
    for (uint32_t i = 0; i <= mdeg; ++i) count *= 5;
    for (uint64_t idx = 1; idx < count; ++idx) {
        Poly m(f5, oracles::message_digits(f5, mdeg + 1, idx));
        Poly c = m * c5.g1();
        CHECK(bch_designed_distance_check(f5, c, 2, c5.d() - 1));
        CHECK(c.weight() >= c5.d() - 1);
    }
}
