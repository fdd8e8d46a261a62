#pragma once

#include <cstddef>
#include <functional>

namespace dh {

/// Runs body(i) for i in [0, n). Implementations may run tasks concurrently but
/// must return only after every task finished. Results are written by index, so
/// the order of execution never affects output.
using ParallelFor = std::function<void(std::size_t n, const std::function<void(std::size_t)>& body)>;

inline void serial_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  for (std::size_t i = 0; i < n; ++i) body(i);
}

/// Thread-pool backed ParallelFor with `jobs` workers; jobs <= 1 is serial_for.
ParallelFor threaded_for(int jobs);

}  // namespace dh
