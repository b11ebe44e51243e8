#pragma once

// Minimal work sharing for independent sub-computations. Results are always
// written by index, so output order never depends on scheduling.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace ipgap {

/// Thread cap from IPGAP_THREADS (default 1; invalid values fall back to 1).
inline unsigned threads_from_env() {
  const char* s = std::getenv("IPGAP_THREADS");
  if (!s || !*s) return 1;
  try {
    long v = std::stol(s);
    return v >= 1 ? static_cast<unsigned>(std::min<long>(v, 256)) : 1u;
  } catch (const std::exception&) {
    return 1;
  }
}

/// Calls f(i) for i in [0, n). The first exception thrown is rethrown.
template <class F>
void parallel_for(std::size_t n, unsigned threads, F&& f) {
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        f(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(n);
      }
    }
  };
  std::vector<std::thread> pool;
  const std::size_t count = std::min<std::size_t>(threads, n);
  for (std::size_t k = 0; k < count; ++k) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace ipgap
