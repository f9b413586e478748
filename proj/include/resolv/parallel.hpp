#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace resolv {

/// Runs body(begin, end) over contiguous blocks of [0, count). Blocks are
/// disjoint, so any body that only writes its own indices is deterministic
/// regardless of the thread count.
template <class Body>
void parallel_blocks(std::size_t count, std::size_t threads, Body&& body) {
  threads = std::max<std::size_t>(1, std::min(threads, count));
  if (threads <= 1) {
    body(std::size_t{0}, count);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  const std::size_t chunk = (count + threads - 1) / threads;
  for (std::size_t t = 0; t < threads; ++t) {
    const std::size_t begin = t * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&body, begin, end] { body(begin, end); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace resolv
