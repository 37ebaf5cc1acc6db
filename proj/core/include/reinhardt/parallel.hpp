#pragma once
// Deterministic sharded execution: work is split into independently indexed
// shards claimed from an atomic counter; callers merge per-shard outputs in
// shard order, so results do not depend on the worker count.

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace reinhardt {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Calls fn(shard) for every shard in [0, shard_count). fn runs concurrently
// and must only touch its own shard's output slot. The first exception wins
// and is rethrown after all workers stop.
template <class Fn>
void run_sharded(std::int64_t shard_count, int threads, Fn&& fn) {
  threads = resolve_threads(threads);
  if (threads <= 1 || shard_count <= 1) {
    for (std::int64_t i = 0; i < shard_count; ++i) fn(i);
    return;
  }
  if (threads > shard_count) threads = static_cast<int>(shard_count);

  std::atomic<std::int64_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    while (!failed.load(std::memory_order_relaxed)) {
      std::int64_t shard = next.fetch_add(1, std::memory_order_relaxed);
      if (shard >= shard_count) return;
      try {
        fn(shard);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        failed.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace reinhardt
