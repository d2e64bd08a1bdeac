#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace fincat {

/// Runs body(i) for i in [0, n) on up to `threads` workers (the caller is one
/// of them). The first exception thrown stops further dispatch and is
/// rethrown here.
template <typename F>
void parallel_for(std::size_t n, std::size_t threads, F&& body) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(n);
        return;
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const std::size_t extra = std::min(threads, n) - 1;
    pool.reserve(extra);
    for (std::size_t k = 0; k < extra; ++k) pool.emplace_back(work);
    work();
  }
  if (error) std::rethrow_exception(error);
}

} // namespace fincat
