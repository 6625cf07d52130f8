#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace rqit {

// Evaluates fn(i) for i in [0, count) on `threads` workers. Results are stored
// by index, so output order never depends on scheduling.
template <typename T>
std::vector<T> parallel_map(std::size_t count, int threads,
                            const std::function<T(std::size_t)>& fn) {
  std::vector<T> out(count);
  if (threads < 1) threads = 1;
  if (threads == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
        out[i] = fn(i);
    });
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace rqit
