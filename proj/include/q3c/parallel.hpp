#pragma once

/* Minimal chunked parallel loop.  Work is split into contiguous ranges, one
 * per worker; callers accumulate into per-chunk buffers and merge in chunk
 * order, so results never depend on scheduling. */

#include <cstdint>
#include <thread>
#include <vector>

namespace q3c {

inline unsigned effective_threads(unsigned requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

/* f(chunk_index, begin, end) over [begin, end) split into `threads` ranges. */
template <class F>
void parallel_chunks(std::uint64_t begin, std::uint64_t end, unsigned threads,
                     F&& f) {
  threads = effective_threads(threads);
  const std::uint64_t total = end > begin ? end - begin : 0;
  if (total == 0) return;
  if (threads <= 1 || total < 2 * threads) {
    f(0u, begin, end);
    return;
  }
  std::vector<std::thread> pool;
  const std::uint64_t step = total / threads;
  std::uint64_t lo = begin;
  for (unsigned i = 0; i < threads; ++i) {
    const std::uint64_t hi = (i + 1 == threads) ? end : lo + step;
    pool.emplace_back([&f, i, lo, hi] { f(i, lo, hi); });
    lo = hi;
  }
  for (auto& t : pool) t.join();
}

}  // namespace q3c
