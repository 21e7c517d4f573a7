#pragma once

// Bounded fan-out over an index range. Results land in index order so the
// caller's reduction is deterministic regardless of scheduling.

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace snipsec::detail {

template <class R, class F>
std::vector<R> parallel_map(std::size_t n, std::size_t jobs, F&& fn)
{
    std::vector<R> out(n);
    jobs = std::max<std::size_t>(1, std::min(jobs, n));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            out[i] = fn(i);
        }
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::mutex err_mu;
    std::exception_ptr err;
    std::size_t err_index = n;
    auto worker = [&]() {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                out[i] = fn(i);
            } catch (...) {
                std::lock_guard lock(err_mu);
                // keep the lowest failing index so the reported error is stable
                if (i < err_index) {
                    err_index = i;
                    err = std::current_exception();
                }
            }
        }
    };
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (std::size_t t = 0; t < jobs; ++t) {
        threads.emplace_back(worker);
    }
    for (auto& t : threads) {
        t.join();
    }
    if (err) {
        std::rethrow_exception(err);
    }
    return out;
}

}  // namespace snipsec::detail
