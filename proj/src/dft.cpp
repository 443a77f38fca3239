#include "deephole/dft.hpp"

namespace deephole {

namespace {

Poly low_part(const Field& f, const Poly& p, uint32_t k) {
    std::vector<uint32_t> c;
    for (uint32_t i = 0; i < k; ++i) c.push_back(p.coeff(i));
    return Poly(f, std::move(c));
}

void check_message_degree(const Poly& p, uint32_t k, const char* what) {
    if (p.degree() && *p.degree() > static_cast<int>(k) - 1)
        throw MessageDegreeTooHigh(std::string(what) + " must have degree <= k-1");
}

}  // namespace

Word dft(const Word& v) {
    const Field& f = v.field();
    uint32_t n = f.q() - 1;
    std::vector<uint32_t> out(n, 0);
    for (uint32_t j = 0; j < n; ++j) {
        uint32_t acc = 0;
        for (uint32_t i = 0; i < n; ++i) {
            if (v[i] == 0) continue;
            acc = f.add(acc, f.mul_nonzero(v[i], f.alpha_pow(static_cast<int64_t>(i) * j)));
        }
        out[j] = acc;
    }
    return Word(f, std::move(out));
}

Word idft(const Word& vhat) {
    const Field& f = vhat.field();
    uint32_t n = f.q() - 1;
    std::vector<uint32_t> out(n, 0);
    for (uint32_t i = 0; i < n; ++i) {
        uint32_t acc = 0;
        for (uint32_t j = 0; j < n; ++j) {
            if (vhat[j] == 0) continue;
            acc = f.add(acc, f.mul_nonzero(vhat[j], f.alpha_pow(-static_cast<int64_t>(i) * j)));
        }
        out[i] = f.neg(acc);  // 1/(q-1) = -1
    }
    return Word(f, std::move(out));
}

namespace {

Word as_coeff_word(const Poly& p) {
    const Field& f = p.field();
    uint32_t n = f.q() - 1;
    if (p.degree() && *p.degree() > static_cast<int>(n) - 1)
        throw DegreeTooHigh("transform requires degree <= q-2");
    std::vector<uint32_t> c(n, 0);
    for (uint32_t i = 0; i < n; ++i) c[i] = p.coeff(i);
    return Word(f, std::move(c));
}

}  // namespace

Poly dft_poly(const Poly& v) {
    Word out = dft(as_coeff_word(v));
    return Poly(v.field(), out.entries());
}

Poly idft_poly(const Poly& vhat) {
    Word out = idft(as_coeff_word(vhat));
    return Poly(vhat.field(), out.entries());
}

Poly poly_to_cyclic(const CyclicRSCode& code, const Poly& s) {
    require_same_field(code.field(), s.field());
    check_message_degree(s, code.k(), "s");
    auto [l, r] = dft_poly(s).divmod(code.g());
    if (!r.is_zero())
        throw InexactDivision("transform of a low-degree polynomial was not a multiple of g");
    return l;
}

Poly cyclic_to_poly(const CyclicRSCode& code, const Poly& l) {
    require_same_field(code.field(), l.field());
    check_message_degree(l, code.k(), "l");
    Poly s = idft_poly(l * code.g());
    if (s.degree() && *s.degree() > static_cast<int>(code.k()) - 1)
        throw InexactDivision("inverse transform of a code multiple had degree >= k");
    return s;
}

DeepHoleImage deep_hole_image(const CyclicRSCode& code, const Poly& u) {
    const Field& f = code.field();
    require_same_field(f, u.field());
    uint32_t n = code.n(), k = code.k();
    if (u.degree() && *u.degree() > static_cast<int>(n) - 1)
        throw DegreeTooHigh("u must have degree <= q-2");

    bool high = u.coeff(n - 1) != 0;
    for (uint32_t i = k; high && i + 1 < n; ++i) high = u.coeff(i) == 0;
    bool konly = u.coeff(k) != 0;
    for (uint32_t i = k + 1; konly && i < n; ++i) konly = u.coeff(i) == 0;
    if (!high && !konly)
        throw NotDeepHoleShape(
            "u(x) is neither a*x^{q-2}+f(x) nor a*x^k+f(x) with deg f <= k-1");

    // The inverse transform of the center is supported on one high
    // degree (q-2 for g1, k for g2) plus degrees < k; scale it to match
    // u's leading coefficient and cancel the low parts through the
    // forward map.
    const bool use_g1 = high;
    const Poly& center = use_g1 ? code.g1() : code.g2();
    uint32_t lead_deg = use_g1 ? n - 1 : k;
    Poly center_idft = idft_poly(center);
    uint32_t lead = center_idft.coeff(lead_deg);
    uint32_t a = f.div(u.coeff(lead_deg), lead);
    Poly l1 = poly_to_cyclic(code, low_part(f, center_idft, k));
    Poly l2 = poly_to_cyclic(code, low_part(f, u, k));
    Poly l = l2 - l1.scaled(a);
    return DeepHoleImage{a, std::move(l), use_g1 ? DeepHoleCenter::g1 : DeepHoleCenter::g2};
}

std::pair<uint32_t, uint32_t> distance_preservation_check(const Poly& s, const Poly& t) {
    require_same_field(s.field(), t.field());
    uint32_t lhs = static_cast<uint32_t>(hamming_distance(s.eval_word(), t.eval_word()));
    uint32_t rhs = static_cast<uint32_t>(coeff_distance(dft_poly(s), dft_poly(t)));
    return {lhs, rhs};
}

}  // namespace deephole
