#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace astlab {

// Runs fn(0..count-1) across worker threads. Results must be written to
// caller-owned slots indexed by i so the outcome is deterministic. jobs = 0
// picks the hardware concurrency.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn,
                         unsigned jobs = 0) {
    if (count == 0) return;
    unsigned workers = jobs ? jobs : std::thread::hardware_concurrency();
    if (workers <= 1 || count == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    workers = std::min<std::size_t>(workers, count);
    std::vector<std::thread> threads;
    std::exception_ptr error;
    std::mutex error_mutex;
    std::atomic<std::size_t> next{0};
    for (unsigned w = 0; w < workers; ++w) {
        threads.emplace_back([&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace astlab
