#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gqs {

// Deterministic reduction over tasks 0..n_tasks-1. merge must be associative
// and commutative (max under a total order, integer sums); the result is then
// independent of worker count and scheduling. Task exceptions are rethrown.
template <class Acc, class TaskFn, class MergeFn>
Acc parallel_reduce(std::int64_t n_tasks, int workers, Acc init, TaskFn&& task, MergeFn&& merge) {
    if (workers <= 1 || n_tasks <= 1) {
        Acc acc = init;
        for (std::int64_t i = 0; i < n_tasks; ++i) acc = merge(acc, task(i));
        return acc;
    }

    std::atomic<std::int64_t> next{0};
    std::vector<Acc> partial(static_cast<std::size_t>(workers), init);
    std::exception_ptr error;
    std::mutex error_mu;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            Acc local = init;
            try {
                for (;;) {
                    std::int64_t i = next.fetch_add(1, std::memory_order_relaxed);
                    if (i >= n_tasks) break;
                    local = merge(local, task(i));
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!error) error = std::current_exception();
                next.store(n_tasks, std::memory_order_relaxed);
            }
            partial[static_cast<std::size_t>(w)] = local;
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);

    Acc acc = init;
    for (const auto& p : partial) acc = merge(acc, p);
    return acc;
}

} // namespace gqs
