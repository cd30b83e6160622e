#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace lgc {

// Splits [0, count) into `threads` contiguous chunks and runs
// fn(chunk, begin, end) on each. Chunk boundaries depend only on
// (count, threads), so callers that merge per-chunk results in chunk order
// are deterministic.
template <typename Fn>
void ParallelChunks(std::int64_t count, int threads, Fn&& fn) {
  threads = std::max(1, threads);
  threads = static_cast<int>(std::min<std::int64_t>(threads, std::max<std::int64_t>(count, 1)));
  if (threads == 1) {
    fn(0, std::int64_t{0}, count);
    return;
  }
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(threads);
  workers.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    const std::int64_t begin = count * t / threads;
    const std::int64_t end = count * (t + 1) / threads;
    workers.emplace_back([&fn, &errors, t, begin, end] {
      try {
        fn(t, begin, end);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  // First failing chunk wins, so the reported error does not depend on timing.
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace lgc
