#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace swe {

namespace detail {
inline std::atomic<int>& thread_cap() {
  static std::atomic<int> cap{0};  // 0 = not resolved yet
  return cap;
}
}  // namespace detail

// Data-parallel width. Resolved once from SWE_THREADS (clamped to hardware),
// overridable at runtime with set_max_threads().
inline int max_threads() {
  int cap = detail::thread_cap().load(std::memory_order_relaxed);
  if (cap > 0) return cap;
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  int resolved = hw;
  if (const char* env = std::getenv("SWE_THREADS")) {
    int requested = std::atoi(env);
    if (requested >= 1) resolved = std::min(requested, hw);
  }
  detail::thread_cap().store(resolved, std::memory_order_relaxed);
  return resolved;
}

inline void set_max_threads(int n) {
  detail::thread_cap().store(n < 1 ? 1 : n, std::memory_order_relaxed);
}

// Static-partition parallel loop. Each worker owns a contiguous index range
// and must write only to slots of its own indices; no reductions happen here,
// so the result is bitwise independent of the thread count.
template <class Body>
void parallel_for(long begin, long end, Body&& body, long grain = 512) {
  long n = end - begin;
  if (n <= 0) return;
  int width = max_threads();
  long chunks = std::min<long>(width, (n + grain - 1) / grain);
  if (chunks <= 1) {
    for (long i = begin; i < end; ++i) body(i);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(static_cast<size_t>(chunks - 1));
  long base = n / chunks, rem = n % chunks;
  long lo = begin;
  for (long c = 0; c < chunks; ++c) {
    long hi = lo + base + (c < rem ? 1 : 0);
    if (c == chunks - 1) {
      for (long i = lo; i < hi; ++i) body(i);
    } else {
      workers.emplace_back([=, &body] {
        for (long i = lo; i < hi; ++i) body(i);
      });
    }
    lo = hi;
  }
  for (auto& w : workers) w.join();
}

}  // namespace swe
