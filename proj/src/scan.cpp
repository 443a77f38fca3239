#include "scan.hpp"

#include "deephole/poly.hpp"

namespace deephole::detail {

namespace {

// base-q digits of idx, least significant first
std::vector<uint32_t> digits_of(uint64_t idx, uint32_t q, uint32_t k) {
    std::vector<uint32_t> d(k);
    for (uint32_t j = 0; j < k; ++j) {
        d[j] = static_cast<uint32_t>(idx % q);
        idx /= q;
    }
    return d;
}

// encoding step table: delta[e] = (e+1 mod q) - e in the field, the
// coefficient change when a message digit ticks (never zero)
std::vector<uint32_t> delta_table(const Field& f) {
    std::vector<uint32_t> d(f.q());
    for (uint32_t e = 0; e < f.q(); ++e)
        d[e] = f.sub(e + 1 == f.q() ? 0 : e + 1, e);
    return d;
}

}  // namespace

ScanBest scan_eval(const RSCode& code, std::span<const uint32_t> target,
                   bool skip_zero_message, uint64_t begin, uint64_t end) {
    const Field& f = code.field();
    const uint32_t q = f.q(), n = code.n(), k = code.k();

    // col[j][i] = alpha^{ij}, the word of x^j
    std::vector<std::vector<uint32_t>> col(k, std::vector<uint32_t>(n));
    for (uint32_t j = 0; j < k; ++j)
        for (uint32_t i = 0; i < n; ++i)
            col[j][i] = f.alpha_pow(static_cast<int64_t>(i) * j);
    std::vector<uint32_t> delta = delta_table(f);

    std::vector<uint32_t> dig = digits_of(begin, q, k);
    std::vector<uint32_t> cw(n, 0);
    for (uint32_t j = 0; j < k; ++j) {
        if (dig[j] == 0) continue;
        for (uint32_t i = 0; i < n; ++i)
            cw[i] = f.add(cw[i], f.mul_nonzero(dig[j], col[j][i]));
    }

    ScanBest best;
    best.distance = n + 1;
    best.witness = begin;
    for (uint64_t idx = begin; idx < end; ++idx) {
        if (!(skip_zero_message && idx == 0)) {
            uint32_t mis = 0;
            for (uint32_t i = 0; i < n; ++i) {
                mis += cw[i] != target[i];
                if (mis >= best.distance) break;
            }
            if (mis < best.distance) {
                best.distance = mis;
                best.witness = idx;
            }
        }
        if (idx + 1 == end) break;
        for (uint32_t j = 0; j < k; ++j) {
            uint32_t e = dig[j];
            uint32_t ne = e + 1 == q ? 0 : e + 1;
            dig[j] = ne;
            uint32_t de = delta[e];
            const uint32_t* cj = col[j].data();
            for (uint32_t i = 0; i < n; ++i) cw[i] = f.add(cw[i], f.mul_nonzero(de, cj[i]));
            if (ne != 0) break;
        }
    }
    return best;
}

ScanBest scan_cyclic(const CyclicRSCode& code, std::span<const uint32_t> target_dense,
                     bool skip_zero_message, uint64_t begin, uint64_t end) {
    const Field& f = code.field();
    const uint32_t q = f.q(), n = code.n(), k = code.k();
    const std::vector<uint32_t>& g = code.g().coeffs();
    const uint32_t glen = static_cast<uint32_t>(g.size());
    std::vector<uint32_t> delta = delta_table(f);

    std::vector<uint32_t> dig = digits_of(begin, q, k);
    // candidate m(x) g(x), dense over n coefficients
    std::vector<uint32_t> cw(n, 0);
    for (uint32_t j = 0; j < k; ++j) {
        if (dig[j] == 0) continue;
        for (uint32_t i = 0; i < glen; ++i)
            cw[j + i] = f.add(cw[j + i], f.mul_nonzero(dig[j], g[i]));
    }

    ScanBest best;
    best.distance = n + 1;
    best.witness = begin;
    for (uint64_t idx = begin; idx < end; ++idx) {
        if (!(skip_zero_message && idx == 0)) {
            uint32_t mis = 0;
            for (uint32_t i = 0; i < n; ++i) {
                mis += cw[i] != target_dense[i];
                if (mis >= best.distance) break;
            }
            if (mis < best.distance) {
                best.distance = mis;
                best.witness = idx;
            }
        }
        if (idx + 1 == end) break;
        for (uint32_t j = 0; j < k; ++j) {
            uint32_t e = dig[j];
            uint32_t ne = e + 1 == q ? 0 : e + 1;
            dig[j] = ne;
            uint32_t de = delta[e];
            for (uint32_t i = 0; i < glen; ++i) {
                if (g[i] != 0) cw[j + i] = f.add(cw[j + i], f.mul_nonzero(de, g[i]));
            }
            if (ne != 0) break;
        }
    }
    return best;
}

ScanBest scan_parallel(uint64_t total, unsigned workers,
                       const std::function<ScanBest(uint64_t, uint64_t)>& chunk) {
    workers = resolve_workers(workers);
    std::vector<ScanBest> results(workers > total ? static_cast<unsigned>(total) : workers);
    parallel_chunks(total, workers, [&](unsigned w, uint64_t begin, uint64_t end) {
        results[w] = chunk(begin, end);
    });
    ScanBest best;
    for (const ScanBest& r : results) {
        if (r.distance < best.distance ||
            (r.distance == best.distance && r.witness < best.witness))
            best = r;
    }
    return best;
}

}  // namespace deephole::detail
