#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace torus_spectra {

// Worker count: TORUS_SPECTRA_THREADS if set, otherwise all cores.
inline unsigned worker_count() {
    if (const char* env = std::getenv("TORUS_SPECTRA_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Run `work(chunk)` for chunk = 0..n_chunks-1 on a pool of workers.
// The chunk decomposition is fixed by the caller, and each chunk writes
// only its own slot, so results are independent of the worker count and
// of scheduling. Callers combine the per-chunk results in chunk order.
template <typename F>
void parallel_chunks(std::size_t n_chunks, F&& work) {
    unsigned workers = worker_count();
    if (workers <= 1 || n_chunks <= 1) {
        for (std::size_t c = 0; c < n_chunks; ++c) work(c);
        return;
    }
    if (workers > n_chunks) workers = static_cast<unsigned>(n_chunks);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t c = next.fetch_add(1);
                if (c >= n_chunks) return;
                work(c);
            }
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace torus_spectra
