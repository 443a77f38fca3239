#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "deephole/gf.hpp"

namespace deephole {

class Word;

/// Dense univariate polynomial over a Field. Coefficients are stored as
/// canonical encodings, index i holding the coefficient of x^i, with
/// trailing zeros trimmed. The zero polynomial has an empty coefficient
/// vector and degree() == nullopt (the "minus infinity" of the usual
/// degree convention; it is never reported as -1).
class Poly {
public:
    /// Unbound placeholder (used by report types before they are
    /// filled); not usable for arithmetic.
    Poly() = default;
    explicit Poly(const Field& field) : field_(&field) {}
    Poly(const Field& field, std::vector<uint32_t> coeffs);

    static Poly zero(const Field& field) { return Poly(field); }
    static Poly constant(const Field& field, uint32_t c);
    static Poly monomial(const Field& field, uint32_t degree, uint32_t coeff = 1);

    const Field& field() const { return *field_; }
    const std::vector<uint32_t>& coeffs() const { return coeffs_; }
    std::optional<int> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return static_cast<int>(coeffs_.size()) - 1;
    }
    bool is_zero() const { return coeffs_.empty(); }
    /// Coefficient of x^i (zero beyond the stored degree).
    uint32_t coeff(size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }

    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    Poly operator-() const;
    bool operator==(const Poly& rhs) const;
    bool operator!=(const Poly& rhs) const { return !(*this == rhs); }

    /// Scale by a field element.
    Poly scaled(uint32_t c) const;
    /// Multiply by x^j.
    Poly shifted(uint32_t j) const;

    /// Quotient and remainder with deg(remainder) < deg(divisor).
    std::pair<Poly, Poly> divmod(const Poly& divisor) const;

    uint32_t eval(uint32_t x) const;  // Horner
    Element eval(const Element& x) const;

    /// Evaluation word (f(alpha^0), ..., f(alpha^{q-2})); requires
    /// deg f <= q-2.
    Word eval_word() const;

    /// Number of nonzero coefficients.
    size_t weight() const;

    /// "c0 + c1*x + c2*x^2 + ..." with zero terms omitted; "0" for the
    /// zero polynomial.
    std::string str() const;
    static Poly parse(const Field& field, std::string_view text);

private:
    const Field* field_ = nullptr;
    std::vector<uint32_t> coeffs_;

    void trim();
};

/// A received word: a length-(q-1) vector over the field, entry i being
/// the value at evaluation point alpha^i.
class Word {
public:
    /// Unbound placeholder, as for Poly.
    Word() = default;
    Word(const Field& field, std::vector<uint32_t> entries);

    static Word zero(const Field& field);

    const Field& field() const { return *field_; }
    const std::vector<uint32_t>& entries() const { return entries_; }
    size_t size() const { return entries_.size(); }
    uint32_t operator[](size_t i) const { return entries_[i]; }

    Word operator+(const Word& rhs) const;
    Word operator-(const Word& rhs) const;
    bool operator==(const Word& rhs) const;
    bool operator!=(const Word& rhs) const { return !(*this == rhs); }

    /// Number of nonzero entries.
    size_t weight() const;

    /// "(u0,u1,...,u_{n-1})" matching the reference tables.
    std::string str() const;
    /// Accepts comma-separated integers, with or without parentheses.
    static Word parse(const Field& field, std::string_view text);

private:
    const Field* field_ = nullptr;
    std::vector<uint32_t> entries_;
};

/// Number of differing positions.
size_t hamming_distance(const Word& a, const Word& b);
/// Hamming distance of two polynomials viewed as length-(q-1)
/// coefficient vectors (the distance used by the cyclic code version).
size_t coeff_distance(const Poly& a, const Poly& b);

/// Monic polynomial whose root multiset is exactly `roots` (constant 1
/// for an empty sequence).
Poly product_of_linear_factors(const Field& field, std::span<const uint32_t> roots);

/// The unique polynomial of degree <= q-2 through the word's values at
/// the alpha-ordered points, computed via the inverse-transform identity
/// coeff_i = -(sum_j w_j alpha^{-ij}).
Poly lagrange_interpolate(const Word& w);

/// Degree of the word's interpolant (nullopt for the zero word).
std::optional<int> degree_of_word(const Word& w);

/// Newton divided-difference interpolation through arbitrary distinct
/// points; the general-point-set fallback (the alpha-ordered case above
/// is the one the codes use).
Poly interpolate_at(const Field& field, std::span<const uint32_t> xs,
                    std::span<const uint32_t> ys);

}  // namespace deephole
