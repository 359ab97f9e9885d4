#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace qhopf {

// Worker count for data-parallel loops, from QHOPF_WORKERS (default 1).
inline int env_worker_count() {
    const char* s = std::getenv("QHOPF_WORKERS");
    if (!s) return 1;
    int n = std::atoi(s);
    if (n < 1) return 1;
    if (n > 64) return 64;
    return n;
}

// Splits [0, n) into at most `workers` contiguous chunks, runs fn(begin, end)
// on each (concurrently when workers > 1) and returns the chunk results in
// chunk order. Exact arithmetic makes the merged result independent of the
// chunking, but callers must still reduce in the returned order so that
// anything order-sensitive (like accumulated reports) stays deterministic.
template <class T, class Fn>
std::vector<T> run_chunked(std::size_t n, int workers, Fn fn) {
    if (workers <= 1 || n <= 1) {
        std::vector<T> out;
        out.push_back(fn(std::size_t{0}, n));
        return out;
    }
    std::size_t chunks = std::min<std::size_t>(static_cast<std::size_t>(workers), n);
    std::vector<T> out(chunks);
    std::vector<std::thread> threads;
    threads.reserve(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
        std::size_t b = n * c / chunks;
        std::size_t e = n * (c + 1) / chunks;
        threads.emplace_back([&out, c, b, e, &fn] { out[c] = fn(b, e); });
    }
    for (auto& t : threads) t.join();
    return out;
}

}  // namespace qhopf
