#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace ffpnt {

// Worker count used by the parallel helpers: an explicit request wins,
// otherwise the FFPNT_THREADS environment variable, otherwise the hardware
// concurrency. Always >= 1.
unsigned resolve_threads(unsigned requested = 0);

// Runs body(lo, hi) over a disjoint chunked partition of [begin, end), one
// chunk per worker. Workers must not share mutable state; merging results is
// the caller's job (keyed by chunk so output stays deterministic).
template <typename Body>
void parallel_chunks(std::uint64_t begin, std::uint64_t end, unsigned threads, Body&& body) {
    std::uint64_t total = end > begin ? end - begin : 0;
    if (total == 0) return;
    unsigned workers = resolve_threads(threads);
    if (static_cast<std::uint64_t>(workers) > total) workers = static_cast<unsigned>(total);
    if (workers <= 1) {
        body(begin, end);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::uint64_t chunk = total / workers;
    std::uint64_t rem = total % workers;
    std::uint64_t lo = begin;
    for (unsigned w = 0; w < workers; ++w) {
        std::uint64_t hi = lo + chunk + (w < rem ? 1 : 0);
        pool.emplace_back([&body, lo, hi] { body(lo, hi); });
        lo = hi;
    }
    for (auto& t : pool) t.join();
}

}  // namespace ffpnt
