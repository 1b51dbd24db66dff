#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace carlitz {

inline unsigned default_jobs() noexcept {
    const unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

/// Evaluates fn(i) for i in [begin, end) on up to `jobs` threads, each
/// owning one contiguous block, and returns the results in index order.
/// The first exception thrown by any worker is rethrown on the caller.
template <class Fn>
auto parallel_map_ordered(std::uint64_t begin, std::uint64_t end, unsigned jobs, Fn&& fn)
    -> std::vector<decltype(fn(begin))> {
    using R = decltype(fn(begin));
    const std::uint64_t n = end > begin ? end - begin : 0;
    std::vector<R> out(n);
    if (n == 0) return out;
    const std::uint64_t workers = std::clamp<std::uint64_t>(jobs, 1, n);
    if (workers == 1) {
        for (std::uint64_t i = 0; i < n; ++i) out[i] = fn(begin + i);
        return out;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    const std::uint64_t block = (n + workers - 1) / workers;
    for (std::uint64_t w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            try {
                const std::uint64_t lo = w * block, hi = std::min(n, lo + block);
                for (std::uint64_t i = lo; i < hi; ++i) out[i] = fn(begin + i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace carlitz
