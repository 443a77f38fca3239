#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "deephole/errors.hpp"

namespace deephole {

class Field;

/// One element of a finite field, held as its canonical integer encoding
/// together with the field it belongs to. Elements of GF(p^m) are encoded
/// as integers in [0, q): the base-p digit expansion gives the coordinates
/// in the polynomial basis, so 0 encodes zero and 1 encodes one.
class Element {
public:
    Element() = default;
    Element(const Field& field, uint32_t value);

    uint32_t value() const { return value_; }
    const Field& field() const { return *field_; }

    Element operator+(const Element& rhs) const;
    Element operator-(const Element& rhs) const;
    Element operator*(const Element& rhs) const;
    Element operator-() const;
    Element inverse() const;
    Element pow(int64_t e) const;

    bool operator==(const Element& rhs) const;
    bool operator!=(const Element& rhs) const { return !(*this == rhs); }
    bool is_zero() const { return value_ == 0; }

private:
    const Field* field_ = nullptr;
    uint32_t value_ = 0;
};

/// A small finite field GF(p^m) with precomputed discrete-log tables.
///
/// Multiplication, inversion and powering go through the log/antilog
/// tables of a fixed primitive element alpha, so each operation is a
/// couple of array lookups. Addition is digit-wise mod p (a plain
/// modular add for prime fields, a q x q table for small extensions).
///
/// The instance is immutable after construction and safe to share
/// across threads. Poly/Word/code objects keep a pointer to their
/// Field, so the Field must outlive them; it is deliberately
/// non-copyable to keep those pointers stable.
class Field {
public:
    /// Table construction is capped at q = 2^16.
    static constexpr uint32_t max_order = 1u << 16;

    /// Builds GF(p^m). The modulus, when given, must be monic of degree m
    /// with coefficients in [0, p) listed low to high; it is ignored for
    /// m == 1. When omitted and m > 1, a deterministic built-in choice is
    /// used (see default_modulus).
    explicit Field(uint32_t p, uint32_t m = 1,
                   std::optional<std::vector<uint32_t>> modulus = std::nullopt);

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    uint32_t p() const { return p_; }
    uint32_t m() const { return m_; }
    uint32_t q() const { return q_; }
    /// Modulus coefficients low to high (empty for prime fields).
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    /// The canonically smallest primitive element: the least encoding of
    /// multiplicative order q-1. Deterministic for fixed (p, m, modulus).
    Element primitive_element() const { return Element(*this, alpha_); }
    uint32_t alpha() const { return alpha_; }

    Element element(uint32_t value) const;
    Element zero() const { return Element(*this, 0); }
    Element one() const { return Element(*this, 1); }

    /// All q elements in encoding order 0, 1, ..., q-1.
    std::vector<Element> elements() const;
    /// F_q* in alpha order: alpha^0, alpha^1, ..., alpha^{q-2}.
    std::vector<Element> nonzero_elements_in_alpha_order() const;

    // Arithmetic on raw encodings. These are the hot paths; the Element
    // operators defer here.
    uint32_t add(uint32_t a, uint32_t b) const {
        if (m_ == 1) {
            uint32_t s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        if (!addtab_.empty()) return addtab_[a * q_ + b];
        return add_digits(a, b);
    }
    uint32_t neg(uint32_t a) const { return negtab_[a]; }
    uint32_t sub(uint32_t a, uint32_t b) const { return add(a, negtab_[b]); }
    uint32_t mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    /// mul for operands known to be nonzero (skips the zero checks).
    uint32_t mul_nonzero(uint32_t a, uint32_t b) const { return exp_[log_[a] + log_[b]]; }
    uint32_t inv(uint32_t a) const {
        if (a == 0) throw DivisionByZero("inverse of zero");
        return exp_[q_ - 1 - log_[a]];
    }
    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }
    uint32_t pow(uint32_t a, int64_t e) const;

    /// alpha^j for any integer j (reduced mod q-1).
    uint32_t alpha_pow(int64_t j) const {
        int64_t n = q_ - 1;
        return exp_[static_cast<uint32_t>(((j % n) + n) % n)];
    }
    /// Discrete log base alpha; a must be nonzero.
    uint32_t log(uint32_t a) const {
        if (a == 0) throw DivisionByZero("log of zero");
        return log_[a];
    }

    /// "p^m" for default fields, "p^m/c0,c1,...,cm" when a modulus was
    /// supplied explicitly.
    std::string descriptor() const;

    /// Whether another field has the same (p, m, modulus); elements of
    /// spec-equal fields interoperate.
    bool same_spec(const Field& other) const;

    /// The built-in modulus for GF(p^m): the first monic degree-m
    /// polynomial f = x^m - a_{m-1} x^{m-1} - ... - a_0, taking the
    /// vectors (a_{m-1}, ..., a_0) in ascending lexicographic order,
    /// such that x has multiplicative order p^m - 1 mod f. This makes x
    /// itself the canonical primitive element of every default
    /// extension field (e.g. x^2+x+1 for GF(4), x^3+x+1 for GF(8),
    /// x^2+2x+2 for GF(9)).
    static std::vector<uint32_t> default_modulus(uint32_t p, uint32_t m);

private:
    uint32_t p_ = 0, m_ = 0, q_ = 0;
    std::vector<uint32_t> modulus_;  // empty when m == 1
    bool explicit_modulus_ = false;
    uint32_t alpha_ = 0;
    std::vector<uint32_t> exp_;     // size 2(q-1): exp_[j] = alpha^(j mod (q-1))
    std::vector<uint32_t> log_;     // size q, log_[0] unused
    std::vector<uint32_t> negtab_;  // size q
    std::vector<uint16_t> addtab_;  // q x q, small extension fields only

    void build_tables();
    uint32_t add_digits(uint32_t a, uint32_t b) const;
    uint32_t neg_digits(uint32_t a) const;
    uint32_t raw_mul(uint32_t a, uint32_t b) const;  // table-free, used during setup
    uint32_t raw_pow(uint32_t a, uint64_t e) const;
    bool has_full_order(uint32_t a) const;
};

/// Throws MixedFields unless both fields share one spec.
void require_same_field(const Field& a, const Field& b);

}  // namespace deephole
