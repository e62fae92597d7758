#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace texsrc {

inline int default_thread_count() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

/// Runs fn(i) for i in [0, n). Work items are claimed from a shared counter;
/// results must be written to index-addressed slots so the outcome does not
/// depend on the number of threads. The first exception thrown by any worker
/// is rethrown on the calling thread.
template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
    if (threads <= 0) threads = default_thread_count();
    if (n == 0) return;
    if (threads == 1 || n == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) break;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                next.store(n); // stop handing out work
                break;
            }
        }
    };

    std::size_t nworkers = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
    std::vector<std::thread> pool;
    pool.reserve(nworkers);
    for (std::size_t t = 0; t < nworkers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

} // namespace texsrc
