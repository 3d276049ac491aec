#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace schfin {

// Worker count: WORKBENCH_THREADS overrides hardware_concurrency. Minimum 1.
inline unsigned thread_count() {
    if (const char* env = std::getenv("WORKBENCH_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1u;
}

// Runs f(i) for i in [0, n). Each index writes only its own output slot, so
// results are deterministic regardless of schedule. Exceptions from workers
// are rethrown on the calling thread.
template <class F>
void parallel_for(std::size_t n, F&& f) {
    unsigned workers = thread_count();
    if (n <= 1 || workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    if (workers > n) workers = static_cast<unsigned>(n);
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            try {
                for (std::size_t i = w; i < n; i += workers) f(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace schfin
