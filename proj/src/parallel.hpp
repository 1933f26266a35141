#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace sym3q::detail {

// Static contiguous chunks; fn(i) must only write slot i, so results do not
// depend on the thread count.
template <class Fn>
void parallel_for(std::uint64_t n, Fn&& fn) {
  const std::uint64_t workers =
      std::clamp<std::uint64_t>(std::thread::hardware_concurrency(), 1, 16);
  if (n < 256 || workers == 1) {
    for (std::uint64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (n + workers - 1) / workers;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t lo = w * chunk;
    const std::uint64_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::uint64_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace sym3q::detail
