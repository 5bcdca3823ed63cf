#pragma once

// Deterministic parallel sweep: results land in input order no matter how
// the work is partitioned, so thread count never changes emitted values.

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace speclab {

inline unsigned resolve_threads(unsigned requested) {
    // SPECTRAL_LAB_THREADS overrides any caller request
    if (const char* env = std::getenv("SPECTRAL_LAB_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    if (requested >= 1) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, unsigned threads, Fn&& fn) {
    std::vector<T> out(n);
    threads = resolve_threads(threads);
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                out[i] = fn(i);
            }
        });
    }
    for (auto& th : pool) th.join();
    return out;
}

}  // namespace speclab
