#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace asca {

// Worker count from ASCA_THREADS, else the hardware concurrency, at least 1.
int default_threads();

// Splits [0, count) into one contiguous block per worker and runs
// fn(worker, begin, end) on each. Callers keep per-worker accumulators and
// merge them in worker order, which keeps results independent of scheduling.
// The first exception thrown by a worker is rethrown.
template <class Fn>
void parallel_blocks(std::size_t count, int threads, Fn&& fn) {
    const std::size_t workers =
        std::max<std::size_t>(1, std::min<std::size_t>(std::size_t(std::max(threads, 1)), count));
    if (workers == 1) {
        fn(std::size_t{0}, std::size_t{0}, count);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = count * w / workers;
        const std::size_t end = count * (w + 1) / workers;
        pool.emplace_back([&, w, begin, end] {
            try {
                fn(w, begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

inline std::size_t worker_count(std::size_t count, int threads) {
    return std::max<std::size_t>(1, std::min<std::size_t>(std::size_t(std::max(threads, 1)), count));
}

}  // namespace asca
