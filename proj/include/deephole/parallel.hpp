#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace deephole {

/// Resolves a requested worker count: 0 means hardware concurrency
/// (at least 1).
inline unsigned resolve_workers(unsigned requested) {
    if (requested != 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Runs fn(worker, begin, end) over an even partition of [0, total)
/// into `workers` contiguous chunks, one thread per non-empty chunk.
/// Chunk boundaries depend only on (total, workers), so any
/// deterministic per-chunk computation merged in chunk order yields
/// identical results for every worker count.
template <typename Fn>
void parallel_chunks(uint64_t total, unsigned workers, Fn&& fn) {
    if (total == 0) return;
    if (workers <= 1 || total == 1) {
        fn(0u, uint64_t{0}, total);
        return;
    }
    if (workers > total) workers = static_cast<unsigned>(total);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        uint64_t begin = total * w / workers;
        uint64_t end = total * (w + 1) / workers;
        if (begin == end) continue;
        threads.emplace_back([&fn, w, begin, end] { fn(w, begin, end); });
    }
    for (auto& t : threads) t.join();
}

/// Deterministic seeded generator (splitmix64). Used instead of the
/// standard distributions so sampled runs reproduce bit-for-bit across
/// platforms and standard libraries.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw in [0, bound); bound must be nonzero. The
    /// modulo bias is irrelevant at the bounds used here.
    uint64_t below(uint64_t bound) { return next() % bound; }
};

}  // namespace deephole
