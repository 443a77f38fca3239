#include "deephole/rscode.hpp"

#include "scan.hpp"

namespace deephole {

namespace {

void check_dimension(const Field& field, uint32_t k) {
    if (field.q() < 4 || k < 2 || k > field.q() - 2)
        throw HypothesisViolated("code dimension must satisfy 2 <= k <= q-2 (q >= 4), got q=" +
                                 std::to_string(field.q()) + " k=" + std::to_string(k));
}

}  // namespace

RSCode::RSCode(const Field& field, uint32_t k) : field_(&field), k_(k) {
    check_dimension(field, k);
}

Word RSCode::encode(const Poly& message) const {
    require_same_field(*field_, message.field());
    if (message.degree() && *message.degree() > static_cast<int>(k_) - 1)
        throw MessageDegreeTooHigh("message degree " + std::to_string(*message.degree()) +
                                   " exceeds k-1 = " + std::to_string(k_ - 1));
    return message.eval_word();
}

bool RSCode::is_codeword(const Word& w) const {
    require_same_field(*field_, w.field());
    auto deg = degree_of_word(w);
    return !deg || *deg <= static_cast<int>(k_) - 1;
}

uint64_t RSCode::message_count() const {
    return detail::pow_saturating(field_->q(), k_);
}

Poly RSCode::message(uint64_t index) const {
    std::vector<uint32_t> c(k_);
    for (uint32_t j = 0; j < k_; ++j) {
        c[j] = static_cast<uint32_t>(index % field_->q());
        index /= field_->q();
    }
    return Poly(*field_, std::move(c));
}

uint32_t RSCode::minimum_distance(DistanceMethod method, SearchOptions opt) const {
    if (method == DistanceMethod::formula) return n() - k_ + 1;
    uint64_t total = message_count();
    detail::require_within_cap(total, opt.force);
    std::vector<uint32_t> zero(n(), 0);
    auto best = detail::scan_parallel(total, opt.workers, [&](uint64_t b, uint64_t e) {
        return detail::scan_eval(*this, zero, /*skip_zero_message=*/true, b, e);
    });
    return best.distance;
}

CyclicRSCode::CyclicRSCode(const Field& field, uint32_t k)
    : field_(&field), k_(k), g_(field), g1_(field), g2_(field) {
    check_dimension(field, k);
    // g has roots alpha, alpha^2, ..., alpha^{d-1}
    std::vector<uint32_t> roots;
    for (uint32_t i = 1; i < d(); ++i) roots.push_back(field.alpha_pow(i));
    g_ = product_of_linear_factors(field, roots);
    auto [q1, r1] = g_.divmod(Poly(field, {field.neg(field.alpha_pow(1)), 1}));
    auto [q2, r2] = g_.divmod(Poly(field, {field.neg(field.alpha_pow(d() - 1)), 1}));
    if (!r1.is_zero() || !r2.is_zero())
        throw Error("generator does not split as expected");  // unreachable
    g1_ = std::move(q1);
    g2_ = std::move(q2);
}

Poly CyclicRSCode::encode(const Poly& message) const {
    require_same_field(*field_, message.field());
    if (message.degree() && *message.degree() > static_cast<int>(k_) - 1)
        throw MessageDegreeTooHigh("message degree " + std::to_string(*message.degree()) +
                                   " exceeds k-1 = " + std::to_string(k_ - 1));
    return message * g_;
}

bool CyclicRSCode::is_codeword(const Poly& c) const {
    require_same_field(*field_, c.field());
    if (c.degree() && *c.degree() > static_cast<int>(n()) - 1) return false;
    return c.divmod(g_).second.is_zero();
}

uint64_t CyclicRSCode::message_count() const {
    return detail::pow_saturating(field_->q(), k_);
}

Poly CyclicRSCode::message(uint64_t index) const {
    std::vector<uint32_t> c(k_);
    for (uint32_t j = 0; j < k_; ++j) {
        c[j] = static_cast<uint32_t>(index % field_->q());
        index /= field_->q();
    }
    return Poly(*field_, std::move(c));
}

uint32_t CyclicRSCode::minimum_distance(DistanceMethod method, SearchOptions opt) const {
    if (method == DistanceMethod::formula) return n() - k_ + 1;
    uint64_t total = message_count();
    detail::require_within_cap(total, opt.force);
    std::vector<uint32_t> zero(n(), 0);
    auto best = detail::scan_parallel(total, opt.workers, [&](uint64_t b, uint64_t e) {
        return detail::scan_cyclic(*this, zero, /*skip_zero_message=*/true, b, e);
    });
    return best.distance;
}

bool bch_designed_distance_check(const Field& field, const Poly& c, uint32_t l,
                                 uint32_t delta) {
    require_same_field(field, c.field());
    if (c.degree() && *c.degree() > static_cast<int>(field.q()) - 2)
        throw DegreeTooHigh("candidate degree exceeds q-2");
    for (uint32_t i = 0; i + 2 <= delta; ++i)
        if (c.eval(field.alpha_pow(l + i)) != 0) return false;
    return true;
}

}  // namespace deephole
