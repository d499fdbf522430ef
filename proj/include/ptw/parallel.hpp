#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace ptw {

// Worker count: PTW_THREADS if set to a positive integer, otherwise the
// hardware concurrency (1 when unknown).
inline int thread_count() {
  if (const char* env = std::getenv("PTW_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// fn(i) for i in [begin, end), split into contiguous chunks, one thread
// per chunk.  fn must be safe to run concurrently on distinct indices.
template <typename F>
void parallel_for(std::int64_t begin, std::int64_t end, F fn) {
  std::int64_t total = end - begin;
  if (total <= 0) return;
  int workers = thread_count();
  if (workers > total) workers = static_cast<int>(total);
  if (workers <= 1) {
    for (std::int64_t i = begin; i < end; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::int64_t chunk = (total + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    std::int64_t lo = begin + w * chunk;
    std::int64_t hi = lo + chunk < end ? lo + chunk : end;
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::int64_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace ptw
