#pragma once

#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace eulerweft {

/// Resolve a requested worker count: values >= 1 are taken as-is, anything
/// else falls back to the EULERWEFT_THREADS environment variable and then
/// to the hardware concurrency.
inline int resolve_threads(int requested) {
    if (requested >= 1) return requested;
    if (const char* env = std::getenv("EULERWEFT_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

/// Split [0, total) into at most `threads` contiguous chunks and run
/// fn(chunk_index, begin, end) on each. Chunk boundaries depend only on
/// (total, threads), so chunked reductions merged in chunk order are
/// reproducible for a fixed configuration.
template <typename Fn>
void parallel_chunks(std::uint64_t total, int threads, Fn&& fn) {
    std::uint64_t t = threads < 1 ? 1 : static_cast<std::uint64_t>(threads);
    if (t > total) t = total ? total : 1;
    if (t <= 1) {
        fn(std::size_t(0), std::uint64_t(0), total);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(t);
    std::uint64_t chunk = total / t, rem = total % t, begin = 0;
    for (std::uint64_t i = 0; i < t; ++i) {
        std::uint64_t end = begin + chunk + (i < rem ? 1 : 0);
        pool.emplace_back([&fn, i, begin, end] { fn(static_cast<std::size_t>(i), begin, end); });
        begin = end;
    }
    for (auto& th : pool) th.join();
}

}  // namespace eulerweft
