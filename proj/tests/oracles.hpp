#pragma once

// Test-only oracles, kept deliberately independent of the library's
// search and transform paths: distances come from a fresh Horner
// evaluation per message (no incremental codeword updates), and the
// reference interpolation uses the textbook product formula instead of
// the inverse-transform identity.

#include <cstdint>
#include <vector>

#include "deephole/distance.hpp"
#include "deephole/poly.hpp"
#include "deephole/rscode.hpp"

namespace oracles {

using namespace deephole;

inline uint32_t eval_poly_at(const Field& f, const std::vector<uint32_t>& coeffs, uint32_t x) {
    uint32_t acc = 0;
    for (size_t i = coeffs.size(); i-- > 0;) acc = f.add(f.mul(acc, x), coeffs[i]);
    return acc;
}

inline std::vector<uint32_t> message_digits(const Field& f, uint32_t k, uint64_t idx) {
    std::vector<uint32_t> c(k);
    for (uint32_t j = 0; j < k; ++j) {
        c[j] = static_cast<uint32_t>(idx % f.q());
        idx /= f.q();
    }
    return c;
}

// exact distance by plain enumeration, smallest message index wins ties
inline std::pair<uint32_t, uint64_t> naive_exact_distance(const RSCode& code,
                                                          const Word& u) {
    const Field& f = code.field();
    uint32_t n = code.n();
    uint64_t total = 1;
    for (uint32_t j = 0; j < code.k(); ++j) total *= f.q();
    uint32_t best = n + 1;
    uint64_t wit = 0;
    for (uint64_t idx = 0; idx < total; ++idx) {
        auto msg = message_digits(f, code.k(), idx);
        uint32_t d = 0;
        for (uint32_t i = 0; i < n; ++i)
            d += eval_poly_at(f, msg, f.alpha_pow(i)) != u[i];
        if (d < best) {
            best = d;
            wit = idx;
        }
    }
    return {best, wit};
}

inline uint32_t naive_cyclic_distance(const CyclicRSCode& code, const Poly& u) {
    const Field& f = code.field();
    uint32_t n = code.n();
    uint64_t total = 1;
    for (uint32_t j = 0; j < code.k(); ++j) total *= f.q();
    uint32_t best = n + 1;
    for (uint64_t idx = 0; idx < total; ++idx) {
        Poly mg = Poly(f, message_digits(f, code.k(), idx)) * code.g();
        uint32_t d = 0;
        for (uint32_t i = 0; i < n; ++i) d += mg.coeff(i) != u.coeff(i);
        if (d < best) best = d;
    }
    return best;
}

inline uint32_t naive_min_weight(const RSCode& code) {
    const Field& f = code.field();
    uint32_t n = code.n();
    uint64_t total = 1;
    for (uint32_t j = 0; j < code.k(); ++j) total *= f.q();
    uint32_t best = n + 1;
    for (uint64_t idx = 1; idx < total; ++idx) {
        auto msg = message_digits(f, code.k(), idx);
        uint32_t w = 0;
        for (uint32_t i = 0; i < n; ++i) w += eval_poly_at(f, msg, f.alpha_pow(i)) != 0;
        if (w < best) best = w;
    }
    return best;
}

// brute-force multiplicative order by repeated raw multiplication
inline uint64_t multiplicative_order(const Field& f, uint32_t a) {
    uint32_t x = a;
    uint64_t ord = 1;
    while (x != 1) {
        x = f.mul(x, a);
        ++ord;
        if (ord > f.q()) return 0;  // not a unit of full order chain
    }
    return ord;
}

// textbook product-formula interpolation at the alpha-ordered points
inline Poly lagrange_product_formula(const Word& w) {
    const Field& f = w.field();
    uint32_t n = f.q() - 1;
    Poly total(f);
    for (uint32_t i = 0; i < n; ++i) {
        if (w[i] == 0) continue;
        Poly num = Poly::constant(f, 1);
        uint32_t den = 1;
        uint32_t xi = f.alpha_pow(i);
        for (uint32_t j = 0; j < n; ++j) {
            if (j == i) continue;
            uint32_t xj = f.alpha_pow(j);
            num = num * Poly(f, {f.neg(xj), 1});
            den = f.mul(den, f.sub(xi, xj));
        }
        total = total + num.scaled(f.mul(w[i], f.inv(den)));
    }
    return total;
}

}  // namespace oracles
