#pragma once

// Index-space sweeps with a serial reference path and an OpenMP path. Every
// grid kernel in the library funnels through for_each_index, so the two paths
// run the identical per-index body and must agree bit for bit.

#include <cstddef>
#include <exception>
#include <mutex>

namespace lgeom {

enum class Exec { Serial, Parallel };

/// Number of OpenMP threads the parallel path will use (1 without OpenMP).
int parallel_threads();

template <class Body>
void for_each_index(Exec exec, std::size_t n, const Body& body) {
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr first;
  std::mutex guard;
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard lock(guard);
      if (!first) first = std::current_exception();
    }
  }
  if (first) std::rethrow_exception(first);
}

}  // namespace lgeom
