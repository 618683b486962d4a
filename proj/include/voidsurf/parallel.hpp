#pragma once

// Minimal fork-join loop used for independent grid evaluations (secular
// scans, property grids). VOIDSURF_THREADS caps the worker count; unset means
// hardware concurrency. Bodies must not throw across the thread boundary;
// grid code catches per point and marks the slot invalid instead.

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace voidsurf {

inline int thread_count() {
    if (const char* env = std::getenv("VOIDSURF_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
        return 1;  // unparseable or nonpositive value disables threading
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

template <typename Body>
void parallel_for(int n, Body&& body) {
    const int workers = std::min(thread_count(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        threads.emplace_back([&body, w, n, workers] {
            for (int i = w; i < n; i += workers) body(i);
        });
    }
    for (auto& t : threads) t.join();
}

}  // namespace voidsurf
