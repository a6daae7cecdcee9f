#pragma once
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace meetlab {

// Worker cap. MEETLAB_THREADS=0 or unset means hardware concurrency.
inline int worker_count() {
    static const int cached = [] {
        long v = 0;
        if (const char* env = std::getenv("MEETLAB_THREADS")) v = std::strtol(env, nullptr, 10);
        if (v <= 0) v = static_cast<long>(std::thread::hardware_concurrency());
        if (v < 1) v = 1;
        if (v > 256) v = 256;
        return static_cast<int>(v);
    }();
    return cached;
}

// Fork-join loop over [begin, end). Each index is processed exactly once;
// the first exception thrown by any worker is rethrown on the caller.
template <class Fn>
void parallel_for(int begin, int end, Fn&& fn) {
    const int jobs = end - begin;
    if (jobs <= 0) return;
    const int threads = std::min(worker_count(), jobs);
    if (threads <= 1) {
        for (int i = begin; i < end; ++i) fn(i);
        return;
    }
    std::atomic<int> next{begin};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= end) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

} // namespace meetlab
