#ifndef P2PFL_PARALLEL_HPP_
#define P2PFL_PARALLEL_HPP_

#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace p2pfl {

// Runs fn(i) for i in [0, n) across at most `threads` workers with a static
// block partition. Results must not depend on the partition; every call site
// keys its RNG by index, never by worker.
inline void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
    if (n <= 0) return;
    if (threads < 1) threads = 1;
    if (threads > n) threads = n;
    if (threads == 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> workers;
    std::exception_ptr first_error;
    std::mutex error_mutex;
    for (int w = 0; w < threads; ++w) {
        int begin = static_cast<int>(static_cast<long long>(n) * w / threads);
        int end = static_cast<int>(static_cast<long long>(n) * (w + 1) / threads);
        workers.emplace_back([&, begin, end]() {
            try {
                for (int i = begin; i < end; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : workers) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace p2pfl

#endif  // P2PFL_PARALLEL_HPP_
