#pragma once

#include <cstdint>
#include <utility>

#include "deephole/poly.hpp"
#include "deephole/rscode.hpp"

namespace deephole {

/// Length-(q-1) discrete Fourier transform over the field:
/// out_j = sum_i in_i alpha^{ij}.
Word dft(const Word& v);

/// Inverse transform: out_i = (1/(q-1)) sum_j in_j alpha^{-ij}. The
/// scale 1/(q-1) equals -1 in F_q (q*1 = 0), so it is applied as a
/// negation rather than an inversion.
Word idft(const Word& vhat);

/// Coefficient-vector transforms of polynomials of degree <= q-2.
/// Equivalently vhat_j = v(alpha^j) and v_i = -vhat(alpha^{-i}).
Poly dft_poly(const Poly& v);
Poly idft_poly(const Poly& vhat);

/// The codeword correspondence, forward direction: for deg s <= k-1 the
/// transform of s is divisible by g, and the quotient l (deg l <= k-1)
/// is returned. Inexact division here would be an implementation bug,
/// never a valid input; it raises InexactDivision.
Poly poly_to_cyclic(const CyclicRSCode& code, const Poly& s);

/// Reverse direction: s = idft_poly(l*g) has degree <= k-1 for
/// deg l <= k-1; inverse of poly_to_cyclic.
Poly cyclic_to_poly(const CyclicRSCode& code, const Poly& l);

enum class DeepHoleCenter { g1, g2 };

/// Decomposition a*g_center + l*g of the transform of a deep-hole-shaped
/// polynomial.
struct DeepHoleImage {
    uint32_t a = 0;
    Poly l;
    DeepHoleCenter which = DeepHoleCenter::g1;
};

/// For u = a'x^{q-2} + f (or a'x^k + f) with a' != 0 and deg f <= k-1,
/// returns (a, l, which) such that a*g_which + l*g equals dft_poly(u),
/// built constructively: the inverse transform of g1 is supported on
/// degree q-2 plus degrees < k, so a = u_{q-2} / V_{q-2} with
/// V_{q-2} = -g1(alpha), and l is assembled from the two forward-map
/// quotients of the low parts (symmetrically with g2 and V_k for the
/// x^k shape). Raises NotDeepHoleShape if u matches neither form.
DeepHoleImage deep_hole_image(const CyclicRSCode& code, const Poly& u);

/// Computes both sides of the distance-preservation identity by
/// independent routes: first = Hamming distance of the evaluation words
/// of s and t, second = coefficient-vector distance of their transforms.
/// The contract is first == second always.
std::pair<uint32_t, uint32_t> distance_preservation_check(const Poly& s, const Poly& t);

}  // namespace deephole
