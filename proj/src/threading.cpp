#include "seud/threading.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace seud {

int worker_count() {
    int n = 0;
    if (const char* env = std::getenv("SEUD_THREADS"))
        n = std::atoi(env);
    if (n <= 0)
        n = static_cast<int>(std::thread::hardware_concurrency());
    return std::max(n, 1);
}

void parallel_for(size_t n, const std::function<void(size_t, size_t)>& fn) {
    const int workers = std::min<size_t>(worker_count(), n) > 0
                            ? static_cast<int>(std::min<size_t>(worker_count(), n))
                            : 1;
    if (workers <= 1 || n < 4096) {
        fn(0, n);
        return;
    }
    std::vector<std::thread> threads;
    threads.reserve(workers);
    const size_t chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const size_t begin = static_cast<size_t>(w) * chunk;
        const size_t end = std::min(begin + chunk, n);
        if (begin >= end)
            break;
        threads.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& t : threads)
        t.join();
}

} // namespace seud
