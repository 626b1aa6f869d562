#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace polemono {

inline int default_thread_count() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

// Run fn(i) for i in [0, count) on up to n_threads workers. Tasks are
// independent rank computations whose results land in index-addressed slots,
// so scheduling order never affects output. The first exception thrown by
// any task is rethrown after all workers drain.
inline void parallel_for(long count, int n_threads, const std::function<void(long)>& fn) {
  if (count <= 0) return;
  if (n_threads <= 1 || count == 1) {
    for (long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<long> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&]() {
    while (true) {
      long i = next.fetch_add(1);
      if (i >= count) return;
      if (failed.load(std::memory_order_relaxed)) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        failed.store(true, std::memory_order_relaxed);
      }
    }
  };
  long workers = std::min<long>(n_threads, count);
  std::vector<std::thread> threads;
  threads.reserve(static_cast<size_t>(workers));
  for (long t = 0; t < workers; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace polemono
