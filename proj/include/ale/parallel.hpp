#pragma once

/// @file parallel.hpp
/// @brief Deterministic parallel map over an index range. Work items are
/// written into caller-owned slots by index and reduced in index order, so
/// with exact arithmetic the result is identical for any worker count.

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace ale {

inline int default_workers() {
    if (const char* env = std::getenv("ALE_WORKERS")) {
        int w = std::atoi(env);
        if (w >= 1) return w;
    }
    return 1;
}

template <class F>
void parallel_for(std::size_t n, int workers, F&& fn) {
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const int used = static_cast<int>(std::min<std::size_t>(workers, n));
    std::vector<std::thread> pool;
    pool.reserve(used);
    for (int w = 0; w < used; ++w)
        pool.emplace_back([&, w]() {
            for (std::size_t i = w; i < n; i += used) fn(i);
        });
    for (auto& t : pool) t.join();
}

} // namespace ale
