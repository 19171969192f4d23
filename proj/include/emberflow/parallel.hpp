#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace emberflow {

/// Runs body(begin, end) over contiguous chunks of [0, n). Each index is
/// processed by exactly one worker and every per-index computation is
/// independent, so the result does not depend on the chunking.
template <class Body>
void parallel_chunks(int n, int threads, Body&& body) {
    threads = std::max(1, std::min(threads, n));
    if (threads == 1) {
        body(0, n);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const int chunk = (n + threads - 1) / threads;
    for (int w = 0; w < threads; ++w) {
        const int begin = w * chunk;
        const int end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&body, begin, end] { body(begin, end); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace emberflow
