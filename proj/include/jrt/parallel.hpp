#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace jrt::exec {

inline std::atomic<int>& thread_count_cell() {
    static std::atomic<int> cell{0};
    return cell;
}

inline void set_thread_count(int t) { thread_count_cell().store(t > 0 ? t : 0); }

/// Worker count: explicit setting, else JRT_THREADS, else the hardware.
/// Results never depend on it; only wall time does.
inline int thread_count() {
    int t = thread_count_cell().load();
    if (t > 0) return t;
    if (const char* env = std::getenv("JRT_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

/// Applies f(i) for i in [0, count), distributing contiguous blocks over the
/// worker pool.  Each call writes only to its own index, so the aggregate
/// result is deterministic for any thread count.
template <typename F>
void parallel_for(std::size_t count, F&& f) {
    const int threads = std::min<std::size_t>(thread_count(), count ? count : 1);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t block = (count + threads - 1) / threads;
    for (int w = 1; w < threads; ++w) {
        const std::size_t lo = w * block;
        const std::size_t hi = std::min(count, lo + block);
        if (lo >= hi) break;
        pool.emplace_back([&f, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) f(i);
        });
    }
    for (std::size_t i = 0; i < std::min(count, block); ++i) f(i);
    for (auto& th : pool) th.join();
}

}  // namespace jrt::exec
