#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace campsim::detail {

// CAMPSIM_THREADS caps worker-thread count; 0 means "not set".
inline int env_thread_cap() {
  const char* env = std::getenv("CAMPSIM_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const long value = std::strtol(env, &end, 10);
  if (end == env || value <= 0) return 0;
  return static_cast<int>(std::min<long>(value, 1024));
}

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const int cap = env_thread_cap(); cap > 0) return cap;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

// Static block partition; worker t owns [t*count/T, (t+1)*count/T).
// The split depends only on (count, T), so work assignment is
// deterministic for a fixed thread setting.
template <typename Fn>
void parallel_for(int threads, std::int64_t count, Fn&& fn) {
  if (count <= 0) return;
  const auto use =
      static_cast<int>(std::min<std::int64_t>(std::max(threads, 1), count));
  if (use <= 1) {
    for (std::int64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::mutex error_mutex;
  std::exception_ptr first_error;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(use));
  for (int t = 0; t < use; ++t) {
    const std::int64_t begin = count * t / use;
    const std::int64_t end = count * (t + 1) / use;
    pool.emplace_back([&, begin, end] {
      try {
        for (std::int64_t i = begin; i < end; ++i) fn(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (std::thread& worker : pool) worker.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace campsim::detail
