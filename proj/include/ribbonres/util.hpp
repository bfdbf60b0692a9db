#pragma once

// Deterministic task-parallel helper.  Tasks write into preallocated slots,
// so the aggregate is independent of scheduling.

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace ribbonres {

namespace detail {
inline std::atomic<int> thread_override{0};
}

inline void set_default_threads(int t) { detail::thread_override = t; }

inline int default_thread_count() {
    if (int t = detail::thread_override.load(); t >= 1) return t;
    if (const char* env = std::getenv("RIBBONRES_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) return t;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

// Runs fn(i) for i in [0, count); exceptions propagate from the first task
// index that threw.
inline void parallel_for(long count, const std::function<void(long)>& fn, int threads = 0) {
    if (threads <= 0) threads = default_thread_count();
    if (count <= 0) return;
    if (threads == 1 || count == 1) {
        for (long i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<long> next{0};
    std::vector<std::exception_ptr> errors(static_cast<size_t>(count));
    auto worker = [&]() {
        for (;;) {
            long i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                errors[static_cast<size_t>(i)] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    int nt = static_cast<int>(std::min<long>(threads, count));
    pool.reserve(static_cast<size_t>(nt));
    for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace ribbonres
