#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace spwn {

/// Requested worker count resolved against the machine: 0 means hardware
/// concurrency, and never more workers than items.
[[nodiscard]] inline unsigned resolve_workers(unsigned requested, std::size_t count) {
    unsigned hw = std::thread::hardware_concurrency();
    unsigned w = requested != 0 ? requested : (hw != 0 ? hw : 1);
    if (count < w) w = static_cast<unsigned>(count);
    return w == 0 ? 1 : w;
}

/**
 * @brief Run fn(worker_id, index) for every index in [0, count) across a
 *        fixed pool of workers.
 *
 * Indices are handed out in grains from an atomic cursor, so the schedule
 * is dynamic; callers that need deterministic results must make their
 * per-index work independent (own accumulator slot per index or per
 * worker, order-independent reduction). Exceptions from fn propagate out
 * of the calling thread after all workers join.
 */
template <class Fn>
void parallel_for(std::size_t count, unsigned workers, Fn fn) {
    unsigned w = resolve_workers(workers, count);
    if (count == 0) return;
    if (w <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(0u, i);
        return;
    }

    std::size_t grain = count / (static_cast<std::size_t>(w) * 16);
    if (grain == 0) grain = 1;

    std::atomic<std::size_t> cursor{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};

    auto body = [&](unsigned worker_id) {
        for (;;) {
            if (failed.load(std::memory_order_relaxed)) return;
            std::size_t begin = cursor.fetch_add(grain, std::memory_order_relaxed);
            if (begin >= count) return;
            std::size_t end = begin + grain < count ? begin + grain : count;
            try {
                for (std::size_t i = begin; i < end; ++i) fn(worker_id, i);
            } catch (...) {
                if (!failed.exchange(true)) error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(w - 1);
    for (unsigned t = 1; t < w; ++t) pool.emplace_back(body, t);
    body(0);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace spwn
