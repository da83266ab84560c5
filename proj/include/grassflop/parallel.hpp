#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace grassflop {

// Worker count used by parallel_map; 0 means one per hardware thread.
inline std::atomic<int>& parallelism() {
  static std::atomic<int> workers{1};
  return workers;
}

inline int effective_workers() {
  int p = parallelism().load();
  if (p <= 0) p = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  return p;
}

namespace detail {
inline bool& inside_parallel_region() {
  thread_local bool inside = false;
  return inside;
}
}  // namespace detail

// Evaluates f(0..n-1), returning results in index order. Nested calls run serially.
template <class F>
auto parallel_map(std::size_t n, F&& f) -> std::vector<std::invoke_result_t<F&, std::size_t>> {
  using R = std::invoke_result_t<F&, std::size_t>;
  std::vector<R> results(n);
  const std::size_t workers = std::min<std::size_t>(n, effective_workers());
  if (workers <= 1 || detail::inside_parallel_region()) {
    for (std::size_t i = 0; i < n; ++i) results[i] = f(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto body = [&] {
    detail::inside_parallel_region() = true;
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        results[i] = f(i);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
    detail::inside_parallel_region() = false;
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(body);
  body();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace grassflop
