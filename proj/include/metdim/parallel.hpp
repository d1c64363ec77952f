// Minimal static-partition parallel loop. Each index writes disjoint output,
// so results are identical for any thread count.
#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace metdim {

template <class F>
void parallel_for(int begin, int end, int threads, F&& f) {
    int n = end - begin;
    if (n <= 0) return;
    threads = std::max(1, std::min(threads, n));
    if (threads == 1) {
        for (int i = begin; i < end; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    int chunk = (n + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        int lo = begin + t * chunk;
        int hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&f, lo, hi] {
            for (int i = lo; i < hi; ++i) f(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace metdim
