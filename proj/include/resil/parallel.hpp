#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace resil {

inline unsigned hardware_parallelism() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

/// Worker count: an explicit request wins; otherwise RESIL_THREADS caps the
/// machine parallelism.
inline unsigned resolve_threads(unsigned requested = 0) {
    if (requested > 0) {
        return requested;
    }
    unsigned n = hardware_parallelism();
    if (const char* env = std::getenv("RESIL_THREADS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v < n) {
            n = static_cast<unsigned>(v);
        }
    }
    return n;
}

/// Runs fn(i) for i in [0, n) on `threads` workers. Work is handed out through
/// a shared counter; result slots must be disjoint per index.
template <typename Fn>
void parallel_for_index(std::int64_t n, unsigned threads, Fn&& fn) {
    if (n <= 0) {
        return;
    }
    if (threads <= 1 || n == 1) {
        for (std::int64_t i = 0; i < n; ++i) {
            fn(i);
        }
        return;
    }
    unsigned workers = static_cast<unsigned>(
        std::min<std::int64_t>(n, static_cast<std::int64_t>(threads)));
    std::atomic<std::int64_t> next{0};
    std::exception_ptr first_error;
    std::atomic<bool> failed{false};

    auto work = [&]() {
        while (true) {
            std::int64_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= n || failed.load(std::memory_order_relaxed)) {
                return;
            }
            try {
                fn(i);
            } catch (...) {
                if (!failed.exchange(true)) {
                    first_error = std::current_exception();
                }
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back(work);
    }
    for (auto& th : pool) {
        th.join();
    }
    if (failed.load()) {
        std::rethrow_exception(first_error);
    }
}

} // namespace resil
