#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace windcorr {

// Runs fn(i) for i in [0, n). jobs <= 1 stays on the calling thread.
// Work items must be independent; results keyed by index stay deterministic
// regardless of scheduling. The first exception thrown by any item is
// rethrown on the calling thread after all workers finish.
template <typename Fn>
void parallel_for(std::ptrdiff_t n, int jobs, Fn&& fn) {
  if (n <= 0) return;
  if (jobs <= 1 || n == 1) {
    for (std::ptrdiff_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const int workers = static_cast<int>(std::min<std::ptrdiff_t>(jobs, n));
  std::atomic<std::ptrdiff_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::ptrdiff_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace windcorr
