#ifndef RVAR_PARALLEL_HPP
#define RVAR_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace rvar {

inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Number of contiguous chunks [0, n) is split into for the given thread
/// request; also the largest chunk index passed to parallel_for_chunks plus
/// one.
inline std::size_t parallel_chunk_count(std::size_t n, unsigned threads) {
    if (n == 0) return 0;
    const std::size_t workers = std::min<std::size_t>(resolve_threads(threads), n);
    const std::size_t chunk = (n + workers - 1) / workers;
    return (n + chunk - 1) / chunk;
}

/// Run body(chunk_index, begin, end) over a static partition of [0, n), one
/// chunk per worker. The partition depends only on (n, threads), so
/// per-chunk accumulators indexed by chunk_index are reproducible. The first
/// exception thrown by any worker is rethrown.
template <typename Body>
void parallel_for_chunks(std::size_t n, unsigned threads, Body&& body) {
    if (n == 0) return;
    const std::size_t workers = std::min<std::size_t>(resolve_threads(threads), n);
    const std::size_t chunk = (n + workers - 1) / workers;
    if (workers <= 1) {
        body(std::size_t{0}, std::size_t{0}, n);
        return;
    }
    const std::size_t chunks = (n + chunk - 1) / chunk;
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
        const std::size_t begin = c * chunk;
        const std::size_t end = std::min(n, begin + chunk);
        pool.emplace_back([&, c, begin, end] {
            try {
                body(c, begin, end);
            } catch (...) {
                errors[c] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

/// parallel_for_chunks without the chunk index.
template <typename Body>
void parallel_for(std::size_t n, unsigned threads, Body&& body) {
    parallel_for_chunks(n, threads,
                        [&](std::size_t, std::size_t begin, std::size_t end) {
                            body(begin, end);
                        });
}

}  // namespace rvar

#endif
