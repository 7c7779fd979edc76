// sagin-qos — statistical multi-QoS toolkit for satellite/UAV/ground networks
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace saginqos {

inline int default_thread_count() {
    if (const char* env = std::getenv("SAGINQOS_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

// Runs f(i) for i in [0, n). Work items are claimed through an atomic
// cursor; callers that need determinism must make f(i) depend only on i and
// write to per-index slots, after which any reduction runs sequentially.
template <typename F>
void parallel_for(std::size_t n, int threads, F&& f) {
    if (n == 0) return;
    if (threads <= 1 || n == 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    const std::size_t block = std::max<std::size_t>(1, n / (8 * static_cast<std::size_t>(threads)));
    std::atomic<std::size_t> cursor{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t begin = cursor.fetch_add(block);
            if (begin >= n) return;
            const std::size_t end = std::min(n, begin + block);
            for (std::size_t i = begin; i < end; ++i) f(i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads - 1);
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
}

}  // namespace saginqos
