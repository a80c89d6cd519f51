#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace mfunc {

/// Worker count used by data-parallel loops. Defaults to 1; the CLI sets it from --threads.
void set_thread_count(unsigned count) noexcept;
unsigned thread_count() noexcept;

/// Runs fn(block) for every block in [0, n_blocks). Blocks are the unit of
/// determinism: callers merge per-block results in block order, so the output
/// does not depend on how many threads ran.
template <class Fn>
void parallel_blocks(std::size_t n_blocks, Fn&& fn) {
  const std::size_t workers = std::min<std::size_t>(thread_count(), n_blocks);
  if (workers <= 1) {
    for (std::size_t b = 0; b < n_blocks; ++b) fn(b);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t b = next++; b < n_blocks; b = next++) {
      try {
        fn(b);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

/// Splits [0, n) into n_blocks contiguous ranges; returns the half-open range of block b.
inline std::pair<std::size_t, std::size_t> block_range(std::size_t n, std::size_t n_blocks,
                                                        std::size_t b) {
  const std::size_t base = n / n_blocks, extra = n % n_blocks;
  const std::size_t lo = b * base + std::min(b, extra);
  return {lo, lo + base + (b < extra ? 1 : 0)};
}

}  // namespace mfunc
