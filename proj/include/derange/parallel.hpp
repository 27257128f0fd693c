#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

namespace derange {

inline int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Applies f to every item on up to `jobs` threads; results keep input order.
// The first exception in input order is rethrown after all workers stop.
template <class T, class F>
auto ordered_parallel_map(const std::vector<T>& items, int jobs, F f) -> std::vector<decltype(f(items.front()))> {
  using R = decltype(f(items.front()));
  std::vector<std::optional<R>> out(items.size());
  std::vector<std::exception_ptr> errors(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        out[i].emplace(f(items[i]));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int n = std::min<int>(resolve_jobs(jobs), static_cast<int>(std::max<std::size_t>(1, items.size())));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<R> result;
  result.reserve(items.size());
  for (auto& r : out) result.push_back(std::move(*r));
  return result;
}

}  // namespace derange
