#pragma once

// Internal exhaustive-search cores shared by minimum_distance and the
// distance module. Not installed.

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "deephole/parallel.hpp"
#include "deephole/rscode.hpp"

namespace deephole::detail {

/// q^k, saturating at UINT64_MAX.
inline uint64_t pow_saturating(uint64_t base, uint32_t exp) {
    uint64_t acc = 1;
    for (uint32_t i = 0; i < exp; ++i) {
        if (acc > std::numeric_limits<uint64_t>::max() / base)
            return std::numeric_limits<uint64_t>::max();
        acc *= base;
    }
    return acc;
}

inline uint64_t mul_saturating(uint64_t a, uint64_t b) {
    if (b != 0 && a > std::numeric_limits<uint64_t>::max() / b)
        return std::numeric_limits<uint64_t>::max();
    return a * b;
}

inline void require_within_cap(uint64_t total, bool force) {
    if (!force && total > search_cap)
        throw SearchSpaceTooLarge("search space " + std::to_string(total) +
                                  " exceeds cap " + std::to_string(search_cap) +
                                  " (pass force to override)");
}

struct ScanBest {
    uint32_t distance = std::numeric_limits<uint32_t>::max();
    uint64_t witness = 0;
};

/// Minimum Hamming distance from `target` to the codewords with message
/// indices in [begin, end), scanned in index order. The candidate
/// codeword is updated incrementally as the base-q message odometer
/// ticks, and a candidate is abandoned as soon as its mismatch count
/// reaches the running best; since the scan is in order, the witness is
/// always the smallest index achieving the minimum. With
/// skip_zero_message the all-zero message (index 0) is not a candidate,
/// which turns the scan into a minimum-weight search for target = 0.
ScanBest scan_eval(const RSCode& code, std::span<const uint32_t> target,
                   bool skip_zero_message, uint64_t begin, uint64_t end);

/// Same over the cyclic version: candidates are the dense length-(q-1)
/// coefficient vectors of m(x) g(x).
ScanBest scan_cyclic(const CyclicRSCode& code, std::span<const uint32_t> target_dense,
                     bool skip_zero_message, uint64_t begin, uint64_t end);

/// Splits [0, total) into `workers` chunks, runs `chunk` on each and
/// merges by lexicographic (distance, witness) minimum; the result is
/// identical for every worker count.
ScanBest scan_parallel(uint64_t total, unsigned workers,
                       const std::function<ScanBest(uint64_t, uint64_t)>& chunk);

}  // namespace deephole::detail
