#pragma once

#include <cstddef>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace coalglab {

enum class ParallelMode { serial, openmp };

inline bool openmp_available() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

// Deterministic data-parallel map: every index fills its own slot, results are
// returned in index order, so serial and openmp modes produce identical
// output. The serial mode is the reference implementation kept for testing
// and benchmarking. Exceptions thrown by workers are marshalled out of the
// parallel region and rethrown (first index wins).
template <typename T, typename Fn>
std::vector<T> parallel_map_indexed(std::size_t n, ParallelMode mode, Fn&& fn) {
  std::vector<T> out(n);
  if (mode == ParallelMode::serial || !openmp_available()) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
#ifdef _OPENMP
  std::vector<std::exception_ptr> errors(n);
  bool failed = false;
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
      failed = true;
    }
  }
  if (failed)
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
#endif
  return out;
}

}  // namespace coalglab
