#pragma once

#include <atomic>
#include <thread>
#include <vector>

#include "pellian/integer.hpp"

namespace pellian {

/// Inclusive index range.
struct ChunkRange {
    i64 lo = 0, hi = -1;
    bool empty() const { return lo > hi; }
};

/// Splits [lo, hi] into `partitions` contiguous chunks of near-equal size.
/// The split depends only on (lo, hi, partitions), never on thread count.
inline std::vector<ChunkRange> partition_range(i64 lo, i64 hi, int partitions) {
    if (partitions < 1) partitions = 1;
    std::vector<ChunkRange> chunks;
    const i64 n = hi - lo + 1;
    if (n <= 0) return chunks;
    const i64 base = n / partitions, extra = n % partitions;
    i64 cur = lo;
    for (int i = 0; i < partitions && cur <= hi; ++i) {
        const i64 len = base + (i < extra ? 1 : 0);
        if (len == 0) continue;
        chunks.push_back({cur, cur + len - 1});
        cur += len;
    }
    return chunks;
}

/// Runs `worker` over each chunk on up to `threads` threads and returns the
/// per-chunk results in chunk order, so any fold over them is reproducible
/// independent of scheduling.
template <class Result, class Worker>
std::vector<Result> run_partitioned(i64 lo, i64 hi, int partitions, int threads, Worker worker) {
    const std::vector<ChunkRange> chunks = partition_range(lo, hi, partitions);
    std::vector<Result> results(chunks.size());
    if (chunks.empty()) return results;
    const int nt = std::max(1, std::min<int>(threads, static_cast<int>(chunks.size())));
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= chunks.size()) return;
            results[i] = worker(chunks[i]);
        }
    };
    if (nt == 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nt));
        for (int t = 0; t < nt; ++t) pool.emplace_back(run);
        for (auto& th : pool) th.join();
    }
    return results;
}

}  // namespace pellian
