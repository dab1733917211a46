#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace qsw {

/// Worker count: QSW_THREADS when set, else 1.
std::size_t default_thread_count();

/// Runs fn(i) for i in [0, n). Tasks write to disjoint, index-addressed
/// slots, so results do not depend on the schedule or worker count.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                         std::size_t threads) {
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    std::size_t spawn = std::min(threads, n);
    pool.reserve(spawn);
    for (std::size_t t = 0; t < spawn; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    parallel_for(n, fn, default_thread_count());
}

}  // namespace qsw
