#include "deephole/gf.hpp"

#include <algorithm>

namespace deephole {

namespace {

bool is_prime(uint32_t x) {
    if (x < 2) return false;
    for (uint32_t i = 2; i * i <= x; ++i)
        if (x % i == 0) return false;
    return true;
}

std::vector<uint32_t> prime_factors(uint32_t x) {
    std::vector<uint32_t> out;
    for (uint32_t f = 2; f * f <= x; ++f) {
        if (x % f == 0) {
            out.push_back(f);
            while (x % f == 0) x /= f;
        }
    }
    if (x > 1) out.push_back(x);
    return out;
}

// Schoolbook product of digit vectors reduced by a monic modulus, all
// coefficients mod p. Self-contained so it also works while probing
// candidate moduli.
uint32_t poly_basis_mul(uint32_t a, uint32_t b, uint32_t p, uint32_t m,
                        const std::vector<uint32_t>& modulus) {
    uint32_t da[32], db[32];
    for (uint32_t i = 0; i < m; ++i) {
        da[i] = a % p; a /= p;
        db[i] = b % p; b /= p;
    }
    uint64_t prod[63] = {0};
    for (uint32_t i = 0; i < m; ++i) {
        if (da[i] == 0) continue;
        for (uint32_t j = 0; j < m; ++j)
            prod[i + j] = (prod[i + j] + uint64_t{da[i]} * db[j]) % p;
    }
    for (uint32_t i = 2 * m - 2; i >= m && i < 63; --i) {
        uint64_t c = prod[i];
        if (c == 0) continue;
        // subtract c * x^{i-m} * modulus (the monic top term clears prod[i])
        for (uint32_t j = 0; j <= m; ++j) {
            uint64_t& t = prod[i - m + j];
            t = (t + uint64_t{p} * p - c * modulus[j] % p) % p;
        }
    }
    uint32_t out = 0;
    for (uint32_t i = m; i-- > 0;) out = out * p + static_cast<uint32_t>(prod[i]);
    return out;
}

uint32_t poly_basis_pow(uint32_t a, uint64_t e, uint32_t p, uint32_t m,
                        const std::vector<uint32_t>& modulus) {
    uint32_t r = 1;
    while (e) {
        if (e & 1) r = poly_basis_mul(r, a, p, m, modulus);
        a = poly_basis_mul(a, a, p, m, modulus);
        e >>= 1;
    }
    return r;
}

// Multiplicative order q-1 exactly, valid even when the quotient ring
// is not a field (needed while searching for the default modulus).
bool x_has_full_order(uint32_t q, uint32_t p, uint32_t m,
                      const std::vector<uint32_t>& modulus,
                      const std::vector<uint32_t>& factors) {
    if (poly_basis_pow(p, q - 1, p, m, modulus) != 1) return false;
    for (uint32_t ell : factors)
        if (poly_basis_pow(p, (q - 1) / ell, p, m, modulus) == 1) return false;
    return true;
}

// Remainder of monic-divisor long division, coefficients mod p.
std::vector<uint32_t> poly_mod(std::vector<uint32_t> rem, const std::vector<uint32_t>& div,
                               uint32_t p) {
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    while (rem.size() >= div.size()) {
        uint32_t lead = rem.back();
        size_t shift = rem.size() - div.size();
        for (size_t i = 0; i < div.size(); ++i) {
            uint32_t sub = static_cast<uint32_t>(uint64_t{lead} * div[i] % p);
            rem[shift + i] = (rem[shift + i] + p - sub) % p;
        }
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
    }
    return rem;
}

bool is_irreducible(const std::vector<uint32_t>& f, uint32_t p) {
    // trial division by every monic polynomial of degree 1..deg(f)/2
    uint32_t m = static_cast<uint32_t>(f.size()) - 1;
    for (uint32_t d = 1; 2 * d <= m; ++d) {
        uint64_t count = 1;
        for (uint32_t i = 0; i < d; ++i) count *= p;
        for (uint64_t idx = 0; idx < count; ++idx) {
            std::vector<uint32_t> div(d + 1);
            uint64_t t = idx;
            for (uint32_t i = 0; i < d; ++i) { div[i] = t % p; t /= p; }
            div[d] = 1;
            if (poly_mod(f, div, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

Element::Element(const Field& field, uint32_t value) : field_(&field), value_(value) {
    if (value >= field.q())
        throw Error("element encoding " + std::to_string(value) + " out of range for " +
                    field.descriptor());
}

Element Element::operator+(const Element& rhs) const {
    require_same_field(*field_, *rhs.field_);
    return Element(*field_, field_->add(value_, rhs.value_));
}
Element Element::operator-(const Element& rhs) const {
    require_same_field(*field_, *rhs.field_);
    return Element(*field_, field_->sub(value_, rhs.value_));
}
Element Element::operator*(const Element& rhs) const {
    require_same_field(*field_, *rhs.field_);
    return Element(*field_, field_->mul(value_, rhs.value_));
}
Element Element::operator-() const { return Element(*field_, field_->neg(value_)); }
Element Element::inverse() const { return Element(*field_, field_->inv(value_)); }
Element Element::pow(int64_t e) const { return Element(*field_, field_->pow(value_, e)); }

bool Element::operator==(const Element& rhs) const {
    if (field_ == rhs.field_) return value_ == rhs.value_;
    require_same_field(*field_, *rhs.field_);
    return value_ == rhs.value_;
}

Field::Field(uint32_t p, uint32_t m, std::optional<std::vector<uint32_t>> modulus)
    : p_(p), m_(m) {
    if (!is_prime(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
    if (m < 1) throw DegreeMismatch("extension degree must be >= 1");

    uint64_t q = 1;
    for (uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > max_order)
            throw FieldTooLarge("q = p^m exceeds the table cap 2^16");
    }
    q_ = static_cast<uint32_t>(q);

    if (m_ > 1) {
        if (modulus) {
            modulus_ = std::move(*modulus);
            explicit_modulus_ = true;
            if (modulus_.size() != m_ + 1)
                throw DegreeMismatch("modulus must have degree m = " + std::to_string(m_));
            if (modulus_.back() != 1)
                throw ReducibleModulus("modulus must be monic");
            for (uint32_t c : modulus_)
                if (c >= p_)
                    throw ReducibleModulus("modulus coefficient out of range [0, p)");
            if (!is_irreducible(modulus_, p_))
                throw ReducibleModulus("modulus is reducible over GF(" + std::to_string(p_) + ")");
        } else {
            modulus_ = default_modulus(p_, m_);
        }
    }
    // a supplied modulus for m == 1 is implicit and ignored

    build_tables();
}

std::vector<uint32_t> Field::default_modulus(uint32_t p, uint32_t m) {
    uint64_t q64 = 1;
    for (uint32_t i = 0; i < m; ++i) q64 *= p;
    uint32_t q = static_cast<uint32_t>(q64);
    auto factors = prime_factors(q - 1);
    // Walk (a_{m-1}, ..., a_0) in ascending lexicographic order, with
    // f = x^m - a_{m-1} x^{m-1} - ... - a_0, and take the first f with
    // x of full multiplicative order (which forces irreducibility).
    std::vector<uint32_t> avec(m, 0);
    std::vector<uint32_t> mod(m + 1);
    while (true) {
        for (uint32_t i = 0; i < m; ++i)
            mod[i] = (p - avec[m - 1 - i]) % p;  // coefficient of x^i is -a_i
        mod[m] = 1;
        if (x_has_full_order(q, p, m, mod, factors)) return mod;
        // next vector, most-significant digit a_{m-1} slowest
        uint32_t i = m;
        while (i-- > 0) {
            if (++avec[i] < p) break;
            avec[i] = 0;
            if (i == 0) throw Error("no primitive modulus found");  // unreachable
        }
    }
}

uint32_t Field::raw_mul(uint32_t a, uint32_t b) const {
    if (m_ == 1) return static_cast<uint32_t>(uint64_t{a} * b % p_);
    return poly_basis_mul(a, b, p_, m_, modulus_);
}

uint32_t Field::raw_pow(uint32_t a, uint64_t e) const {
    uint32_t r = 1;
    while (e) {
        if (e & 1) r = raw_mul(r, a);
        a = raw_mul(a, a);
        e >>= 1;
    }
    return r;
}

bool Field::has_full_order(uint32_t a) const {
    if (q_ == 2) return a == 1;
    if (raw_pow(a, q_ - 1) != 1) return false;
    for (uint32_t ell : prime_factors(q_ - 1))
        if (raw_pow(a, (q_ - 1) / ell) == 1) return false;
    return true;
}

void Field::build_tables() {
    // canonical primitive element: smallest encoding of order q-1
    alpha_ = 0;
    for (uint32_t a = 1; a < q_; ++a) {
        if (has_full_order(a)) { alpha_ = a; break; }
    }

    exp_.assign(2 * (q_ - 1), 0);
    log_.assign(q_, 0);
    uint32_t x = 1;
    for (uint32_t j = 0; j < q_ - 1; ++j) {
        exp_[j] = x;
        exp_[j + (q_ - 1)] = x;
        log_[x] = j;
        x = raw_mul(x, alpha_);
    }

    negtab_.resize(q_);
    for (uint32_t a = 0; a < q_; ++a) negtab_[a] = neg_digits(a);

    if (m_ > 1 && q_ <= 2048) {
        addtab_.resize(static_cast<size_t>(q_) * q_);
        for (uint32_t a = 0; a < q_; ++a)
            for (uint32_t b = 0; b <= a; ++b) {
                uint16_t s = static_cast<uint16_t>(add_digits(a, b));
                addtab_[static_cast<size_t>(a) * q_ + b] = s;
                addtab_[static_cast<size_t>(b) * q_ + a] = s;
            }
    }
}

uint32_t Field::add_digits(uint32_t a, uint32_t b) const {
    if (m_ == 1) {
        uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    uint32_t out = 0, scale = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        uint32_t s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        out += s * scale;
        scale *= p_;
        a /= p_;
        b /= p_;
    }
    return out;
}

uint32_t Field::neg_digits(uint32_t a) const {
    if (m_ == 1) return a == 0 ? 0 : p_ - a;
    uint32_t out = 0, scale = 1;
    for (uint32_t i = 0; i < m_; ++i) {
        uint32_t d = a % p_;
        out += (d == 0 ? 0 : p_ - d) * scale;
        scale *= p_;
        a /= p_;
    }
    return out;
}

uint32_t Field::pow(uint32_t a, int64_t e) const {
    if (a == 0) {
        if (e < 0) throw DivisionByZero("negative power of zero");
        return e == 0 ? 1 : 0;
    }
    int64_t n = q_ - 1;
    int64_t r = ((e % n) + n) % n;
    return exp_[static_cast<uint32_t>(uint64_t{log_[a]} * r % n)];
}

Element Field::element(uint32_t value) const { return Element(*this, value); }

std::vector<Element> Field::elements() const {
    std::vector<Element> out;
    out.reserve(q_);
    for (uint32_t v = 0; v < q_; ++v) out.emplace_back(*this, v);
    return out;
}

std::vector<Element> Field::nonzero_elements_in_alpha_order() const {
    std::vector<Element> out;
    out.reserve(q_ - 1);
    for (uint32_t j = 0; j < q_ - 1; ++j) out.emplace_back(*this, exp_[j]);
    return out;
}

std::string Field::descriptor() const {
    std::string s = std::to_string(p_) + "^" + std::to_string(m_);
    if (explicit_modulus_) {
        s += "/";
        for (size_t i = 0; i < modulus_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(modulus_[i]);
        }
    }
    return s;
}

bool Field::same_spec(const Field& other) const {
    return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
}

void require_same_field(const Field& a, const Field& b) {
    if (&a == &b) return;
    if (!a.same_spec(b))
        throw MixedFields("operands belong to different fields: " + a.descriptor() +
                          " vs " + b.descriptor());
}

}  // namespace deephole
