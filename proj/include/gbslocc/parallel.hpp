#pragma once

// Minimal fork/join helpers for sweeps. Results are always merged in index
// order, so output never depends on the worker count.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace gbslocc {

/// GBS_LOCC_THREADS if set to a positive integer, else hardware concurrency.
std::size_t worker_count();

/// Calls fn(begin, end, worker) on contiguous chunks of [0, n).
void parallel_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t, std::size_t)> &fn,
                     std::size_t workers = worker_count());

/// out[i] = fn(i) for i in [0, n).
template <typename R, typename F>
std::vector<R> parallel_map(std::size_t n, F &&fn, std::size_t workers = worker_count()) {
    std::vector<R> out(n);
    parallel_chunks(
        n,
        [&](std::size_t begin, std::size_t end, std::size_t) {
            for (std::size_t i = begin; i < end; ++i) {
                out[i] = fn(i);
            }
        },
        workers);
    return out;
}

}  // namespace gbslocc
