#include "flagwalk/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace flagwalk {

int thread_limit() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    const char* env = std::getenv("FLAGWALK_THREADS");
    if (!env || !*env) return hw;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || v < 0) return 1;
    return v == 0 ? hw : static_cast<int>(v);
}

void parallel_for(int n, const std::function<void(int)>& fn) {
    int workers = thread_limit();
    if (workers > n) workers = n;
    if (workers <= 1 || n < 64) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

} // namespace flagwalk
