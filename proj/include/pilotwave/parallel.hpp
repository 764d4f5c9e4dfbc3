// parallel.hpp
// Static-partition parallel loop over an index range.

#ifndef PILOTWAVE_PARALLEL_HPP
#define PILOTWAVE_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace pilotwave {

/// Calls body(i) for i in [0, count) on `workers` threads, each owning one
/// contiguous block. The first exception thrown by any worker is rethrown.
template <typename Body>
void parallel_for(std::size_t count, int workers, Body&& body) {
    const std::size_t n = std::max<std::size_t>(1, std::min<std::size_t>(std::max(workers, 1), count));
    if (n == 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::exception_ptr failure;
    std::mutex guard;
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (std::size_t w = 0; w < n; ++w) {
        const std::size_t lo = count * w / n, hi = count * (w + 1) / n;
        pool.emplace_back([&, lo, hi] {
            try {
                for (std::size_t i = lo; i < hi; ++i) body(i);
            } catch (...) {
                std::lock_guard lock(guard);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
}

/// Worker count from the PILOTWAVE_WORKERS environment variable, else 1.
int default_workers();

}  // namespace pilotwave

#endif  // PILOTWAVE_PARALLEL_HPP
