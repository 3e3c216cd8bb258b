#include "hcp/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace hcp {

namespace {
std::atomic<int> g_thread_count{0};

int resolve_default() {
    if (const char* env = std::getenv("HCP_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}
}  // namespace

int thread_count() {
    const int v = g_thread_count.load(std::memory_order_relaxed);
    return v > 0 ? v : resolve_default();
}

void set_thread_count(int count) { g_thread_count.store(count, std::memory_order_relaxed); }

void parallel_for_ranges(uint64_t begin, uint64_t end,
                         const std::function<void(uint64_t, uint64_t)>& fn) {
    if (begin >= end) return;
    const uint64_t total = end - begin;
    const int workers = static_cast<int>(
        std::min<uint64_t>(static_cast<uint64_t>(std::max(thread_count(), 1)), total));
    if (workers <= 1) {
        fn(begin, end);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    const uint64_t chunk = total / workers;
    const uint64_t rem = total % workers;
    uint64_t at = begin;
    for (int t = 0; t < workers; ++t) {
        const uint64_t len = chunk + (static_cast<uint64_t>(t) < rem ? 1 : 0);
        const uint64_t a = at, b = at + len;
        at = b;
        pool.emplace_back([&fn, a, b] { fn(a, b); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace hcp
