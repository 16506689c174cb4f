#pragma once

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace llab {

/// Thread count resolution: explicit argument, else LLAB_THREADS, else 1.
inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("LLAB_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

/// Runs f(i) for i in [0, nitems); results must be written to preallocated
/// slots so the outcome is independent of the schedule.
template <class F>
void parallel_for(int nitems, int threads, F&& f) {
    threads = std::min(std::max(threads, 1), nitems > 0 ? nitems : 1);
    if (threads <= 1) {
        for (int i = 0; i < nitems; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t]() {
            for (int i = t; i < nitems; i += threads) f(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace llab
