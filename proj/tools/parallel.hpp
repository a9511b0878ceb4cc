#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace bohr::cli {

/// Worker count: BOHR_THREADS if set and positive, else hardware concurrency.
inline unsigned thread_count()
{
    if (const char* env = std::getenv("BOHR_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n > 0)
                return static_cast<unsigned>(n);
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// out[i] = f(i) for i in [0, n), computed concurrently; output order is
/// by index, so results do not depend on scheduling. The first exception
/// thrown by any task is rethrown.
template <typename T, typename F>
std::vector<T> parallel_map(std::size_t n, F f)
{
    std::vector<T> out(n);
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    const auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                out[i] = f(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
            }
        }
    };
    {
        const unsigned workers = std::min<std::size_t>(thread_count(), std::max<std::size_t>(n, 1));
        std::vector<std::jthread> pool;
        for (unsigned w = 1; w < workers; ++w)
            pool.emplace_back(work);
        work();
    }
    if (error)
        std::rethrow_exception(error);
    return out;
}

} // namespace bohr::cli
