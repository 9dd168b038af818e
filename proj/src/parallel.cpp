#include "gbslocc/parallel.hpp"

#include <cstdlib>
#include <string>

namespace gbslocc {

std::size_t worker_count() {
    if (const char *env = std::getenv("GBS_LOCC_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) {
                return static_cast<std::size_t>(v);
            }
        } catch (const std::exception &) {
            // Unparseable override falls through to the default.
        }
    }
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

void parallel_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t, std::size_t)> &fn,
                     std::size_t workers) {
    workers = std::max<std::size_t>(1, std::min(workers, n));
    if (workers <= 1) {
        if (n > 0) {
            fn(0, n, 0);
        }
        return;
    }
    const std::size_t chunk = (n + workers - 1) / workers;
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        if (begin >= end) {
            break;
        }
        threads.emplace_back([&, begin, end, w] {
            try {
                fn(begin, end, w);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto &t : threads) {
        t.join();
    }
    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

}  // namespace gbslocc
