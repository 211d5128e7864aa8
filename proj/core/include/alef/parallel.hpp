#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace alef {

// Splits [0, n) into `threads` contiguous chunks and runs body(begin, end)
// on each. With threads <= 1 (or a single chunk) the body runs inline on
// the calling thread, which defines canonical output. Chunk boundaries
// depend only on (n, threads), so any determinism argument made per chunk
// holds run to run.
template <typename Body>
void parallel_for(std::size_t n, unsigned threads, Body&& body) {
  if (n == 0) return;
  std::size_t workers = threads == 0 ? 1 : threads;
  if (workers > n) workers = n;
  if (workers == 1) {
    body(std::size_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = n * w / workers;
    const std::size_t end = n * (w + 1) / workers;
    pool.emplace_back([&body, begin, end] { body(begin, end); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace alef
