#include "deephole/poly.hpp"

#include <algorithm>
#include <charconv>

namespace deephole {

Poly::Poly(const Field& field, std::vector<uint32_t> coeffs)
    : field_(&field), coeffs_(std::move(coeffs)) {
    for (uint32_t c : coeffs_)
        if (c >= field.q())
            throw Error("coefficient " + std::to_string(c) + " out of range for " +
                        field.descriptor());
    trim();
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(const Field& field, uint32_t c) {
    return Poly(field, std::vector<uint32_t>{c});
}

Poly Poly::monomial(const Field& field, uint32_t degree, uint32_t coeff) {
    std::vector<uint32_t> c(degree + 1, 0);
    c[degree] = coeff;
    return Poly(field, std::move(c));
}

Poly Poly::operator+(const Poly& rhs) const {
    require_same_field(*field_, *rhs.field_);
    const Field& f = *field_;
    std::vector<uint32_t> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
    for (size_t i = 0; i < out.size(); ++i) out[i] = f.add(coeff(i), rhs.coeff(i));
    return Poly(f, std::move(out));
}

Poly Poly::operator-(const Poly& rhs) const {
    require_same_field(*field_, *rhs.field_);
    const Field& f = *field_;
    std::vector<uint32_t> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
    for (size_t i = 0; i < out.size(); ++i) out[i] = f.sub(coeff(i), rhs.coeff(i));
    return Poly(f, std::move(out));
}

Poly Poly::operator*(const Poly& rhs) const {
    require_same_field(*field_, *rhs.field_);
    const Field& f = *field_;
    if (is_zero() || rhs.is_zero()) return Poly(f);
    std::vector<uint32_t> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] = f.add(out[i + j], f.mul(coeffs_[i], rhs.coeffs_[j]));
    }
    return Poly(f, std::move(out));
}

Poly Poly::operator-() const {
    std::vector<uint32_t> out(coeffs_.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = field_->neg(coeffs_[i]);
    return Poly(*field_, std::move(out));
}

bool Poly::operator==(const Poly& rhs) const {
    require_same_field(*field_, *rhs.field_);
    return coeffs_ == rhs.coeffs_;
}

Poly Poly::scaled(uint32_t c) const {
    std::vector<uint32_t> out(coeffs_.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = field_->mul(coeffs_[i], c);
    return Poly(*field_, std::move(out));
}

Poly Poly::shifted(uint32_t j) const {
    if (is_zero()) return *this;
    std::vector<uint32_t> out(coeffs_.size() + j, 0);
    std::copy(coeffs_.begin(), coeffs_.end(), out.begin() + j);
    return Poly(*field_, std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    require_same_field(*field_, *divisor.field_);
    if (divisor.is_zero()) throw DivisionByZeroPoly("division by the zero polynomial");
    const Field& f = *field_;
    std::vector<uint32_t> rem(coeffs_);
    if (rem.size() < divisor.coeffs_.size())
        return {Poly(f), Poly(f, std::move(rem))};
    size_t dsize = divisor.coeffs_.size();
    std::vector<uint32_t> quot(rem.size() - dsize + 1, 0);
    uint32_t lead_inv = f.inv(divisor.coeffs_.back());
    for (size_t i = rem.size(); i >= dsize; --i) {
        size_t pos = i - 1;  // current leading coefficient
        uint32_t c = f.mul(rem[pos], lead_inv);
        if (c != 0) {
            size_t shift = pos - (dsize - 1);
            quot[shift] = c;
            for (size_t j = 0; j < dsize; ++j)
                rem[shift + j] = f.sub(rem[shift + j], f.mul(c, divisor.coeffs_[j]));
        }
    }
    return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

uint32_t Poly::eval(uint32_t x) const {
    const Field& f = *field_;
    uint32_t acc = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) acc = f.add(f.mul(acc, x), coeffs_[i]);
    return acc;
}

Element Poly::eval(const Element& x) const {
    require_same_field(*field_, x.field());
    return Element(*field_, eval(x.value()));
}

Word Poly::eval_word() const {
    const Field& f = *field_;
    uint32_t n = f.q() - 1;
    if (degree() && *degree() > static_cast<int>(n) - 1)
        throw DegreeTooHigh("eval_word requires degree <= q-2, got " +
                            std::to_string(*degree()));
    std::vector<uint32_t> out(n);
    for (uint32_t i = 0; i < n; ++i) out[i] = eval(f.alpha_pow(i));
    return Word(f, std::move(out));
}

size_t Poly::weight() const {
    return static_cast<size_t>(std::count_if(coeffs_.begin(), coeffs_.end(),
                                             [](uint32_t c) { return c != 0; }));
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!s.empty()) s += " + ";
        if (i == 0) {
            s += std::to_string(coeffs_[i]);
        } else {
            s += std::to_string(coeffs_[i]);
            s += "*x";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

namespace {

uint32_t parse_uint(std::string_view text) {
    uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw Error("malformed integer '" + std::string(text) + "'");
    return v;
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

Poly Poly::parse(const Field& field, std::string_view text) {
    text = strip(text);
    if (text.empty() || text == "0") return Poly(field);
    // comma-separated coefficient list, low to high
    if (text.find('x') == std::string_view::npos && text.find(',') != std::string_view::npos) {
        std::vector<uint32_t> coeffs;
        size_t start = 0;
        std::string t(text);
        while (start <= t.size()) {
            size_t comma = t.find(',', start);
            std::string_view piece = strip(std::string_view(t).substr(
                start, comma == std::string::npos ? std::string::npos : comma - start));
            coeffs.push_back(parse_uint(piece));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return Poly(field, std::move(coeffs));
    }
    // term form "c0 + c1*x + c2*x^2"
    std::vector<uint32_t> coeffs;
    std::string t(text);
    size_t start = 0;
    while (start < t.size()) {
        size_t plus = t.find('+', start);
        std::string_view term = strip(std::string_view(t).substr(
            start, plus == std::string::npos ? std::string::npos : plus - start));
        uint32_t c = 1, deg = 0;
        size_t xpos = term.find('x');
        if (xpos == std::string_view::npos) {
            c = parse_uint(term);
        } else {
            std::string_view head = strip(term.substr(0, xpos));
            if (!head.empty() && head.back() == '*') head = strip(head.substr(0, head.size() - 1));
            if (!head.empty()) c = parse_uint(head);
            std::string_view rest = term.substr(xpos + 1);
            if (!rest.empty()) {
                if (rest.front() != '^') throw Error("malformed term '" + std::string(term) + "'");
                deg = parse_uint(strip(rest.substr(1)));
            } else {
                deg = 1;
            }
        }
        if (c >= field.q())
            throw Error("coefficient " + std::to_string(c) + " out of range for " +
                        field.descriptor());
        if (coeffs.size() <= deg) coeffs.resize(deg + 1, 0);
        coeffs[deg] = field.add(coeffs[deg], c);
        if (plus == std::string::npos) break;
        start = plus + 1;
    }
    return Poly(field, std::move(coeffs));
}

Word::Word(const Field& field, std::vector<uint32_t> entries)
    : field_(&field), entries_(std::move(entries)) {
    if (entries_.size() != field.q() - 1)
        throw LengthMismatch("word length " + std::to_string(entries_.size()) +
                             ", expected q-1 = " + std::to_string(field.q() - 1));
    for (uint32_t e : entries_)
        if (e >= field.q())
            throw Error("entry " + std::to_string(e) + " out of range for " +
                        field.descriptor());
}

Word Word::zero(const Field& field) {
    return Word(field, std::vector<uint32_t>(field.q() - 1, 0));
}

Word Word::operator+(const Word& rhs) const {
    require_same_field(*field_, *rhs.field_);
    std::vector<uint32_t> out(entries_.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = field_->add(entries_[i], rhs.entries_[i]);
    return Word(*field_, std::move(out));
}

Word Word::operator-(const Word& rhs) const {
    require_same_field(*field_, *rhs.field_);
    std::vector<uint32_t> out(entries_.size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = field_->sub(entries_[i], rhs.entries_[i]);
    return Word(*field_, std::move(out));
}

bool Word::operator==(const Word& rhs) const {
    require_same_field(*field_, *rhs.field_);
    return entries_ == rhs.entries_;
}

size_t Word::weight() const {
    return static_cast<size_t>(std::count_if(entries_.begin(), entries_.end(),
                                             [](uint32_t e) { return e != 0; }));
}

std::string Word::str() const {
    std::string s = "(";
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(entries_[i]);
    }
    return s + ")";
}

Word Word::parse(const Field& field, std::string_view text) {
    text = strip(text);
    if (!text.empty() && text.front() == '(') text.remove_prefix(1);
    if (!text.empty() && text.back() == ')') text.remove_suffix(1);
    std::vector<uint32_t> entries;
    std::string t(text);
    size_t start = 0;
    while (start <= t.size()) {
        size_t comma = t.find(',', start);
        std::string_view piece = strip(std::string_view(t).substr(
            start, comma == std::string::npos ? std::string::npos : comma - start));
        entries.push_back(parse_uint(piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return Word(field, std::move(entries));
}

size_t hamming_distance(const Word& a, const Word& b) {
    require_same_field(a.field(), b.field());
    if (a.size() != b.size())
        throw LengthMismatch("word lengths differ");
    size_t d = 0;
    for (size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

size_t coeff_distance(const Poly& a, const Poly& b) {
    require_same_field(a.field(), b.field());
    size_t top = std::max(a.coeffs().size(), b.coeffs().size());
    size_t d = 0;
    for (size_t i = 0; i < top; ++i) d += a.coeff(i) != b.coeff(i);
    return d;
}

Poly product_of_linear_factors(const Field& field, std::span<const uint32_t> roots) {
    Poly acc = Poly::constant(field, 1);
    for (uint32_t r : roots)
        acc = acc * Poly(field, {field.neg(r), 1});
    return acc;
}

Poly lagrange_interpolate(const Word& w) {
    // coeff_i = -(sum_j w_j alpha^{-ij}); the 1/(q-1) scale of the
    // inverse transform is -1 in F_q.
    const Field& f = w.field();
    uint32_t n = f.q() - 1;
    std::vector<uint32_t> coeffs(n, 0);
    for (uint32_t i = 0; i < n; ++i) {
        uint32_t acc = 0;
        for (uint32_t j = 0; j < n; ++j) {
            uint32_t wj = w[j];
            if (wj == 0) continue;
            uint64_t e = (uint64_t{i} * j) % n;
            acc = f.add(acc, f.mul(wj, f.alpha_pow(-static_cast<int64_t>(e))));
        }
        coeffs[i] = f.neg(acc);
    }
    return Poly(f, std::move(coeffs));
}

std::optional<int> degree_of_word(const Word& w) { return lagrange_interpolate(w).degree(); }

Poly interpolate_at(const Field& field, std::span<const uint32_t> xs,
                    std::span<const uint32_t> ys) {
    if (xs.size() != ys.size()) throw LengthMismatch("point/value counts differ");
    size_t n = xs.size();
    // divided differences in place
    std::vector<uint32_t> dd(ys.begin(), ys.end());
    for (size_t level = 1; level < n; ++level) {
        for (size_t i = n - 1; i >= level; --i) {
            uint32_t num = field.sub(dd[i], dd[i - 1]);
            uint32_t den = field.sub(xs[i], xs[i - level]);
            if (den == 0) throw Error("interpolation points must be distinct");
            dd[i] = field.mul(num, field.inv(den));
        }
    }
    // Horner over the Newton basis
    Poly acc(field);
    for (size_t i = n; i-- > 0;) {
        acc = acc * Poly(field, {field.neg(xs[i]), 1});
        acc = acc + Poly::constant(field, dd[i]);
    }
    return acc;
}

}  // namespace deephole
