// Shared error types and a tiny deterministic parallel-for.
#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace alexlin {

/// Raised when user-supplied input (DSL text, JSON, flags) is invalid.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an internal mathematical invariant is violated.
struct math_error : std::logic_error {
  explicit math_error(const std::string& what) : std::logic_error(what) {}
};

/// Runs fn(i) for i in [0, n). Work is split over `threads` workers by
/// static block assignment, so results written by index are deterministic
/// regardless of thread count.
inline void parallel_for(std::size_t n, std::size_t threads,
                         const std::function<void(std::size_t)>& fn) {
  if (n == 0) return;
  if (threads <= 1 || n == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  threads = std::min(threads, n);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += threads) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

inline long floor_div(long a, long b) {
  long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline long floor_mod(long a, long b) { return a - floor_div(a, b) * b; }

}  // namespace alexlin
