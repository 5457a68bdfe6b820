#pragma once

#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace landau {

// Worker count for node-parallel loops: LANDAU_ENTROPY_THREADS caps it,
// where 0 or unset means one worker per hardware thread.
inline int thread_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("LANDAU_ENTROPY_THREADS")) {
        char* end = nullptr;
        const long parsed = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && parsed > 0)
            return static_cast<int>(parsed);
    }
    return static_cast<int>(hw);
}

// Runs body(i) for i in [0, count) across workers on contiguous index
// blocks. Each index owns its output slot, so results are identical for any
// worker count. The first exception thrown by a body is rethrown here.
inline void parallel_for(int count, const std::function<void(int)>& body) {
    if (count <= 0) return;
    const int workers = std::min(thread_count(), count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    std::mutex failure_mutex;
    std::exception_ptr failure;
    const int block = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const int begin = w * block;
        const int end = std::min(count, begin + block);
        if (begin >= end) break;
        pool.emplace_back([&, begin, end] {
            try {
                for (int i = begin; i < end; ++i) body(i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

} // namespace landau
