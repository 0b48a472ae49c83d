#ifndef LOCOH_PARALLEL_HPP
#define LOCOH_PARALLEL_HPP

#include <exception>
#include <functional>

#ifdef LOCOH_HAVE_OPENMP
#include <omp.h>
#endif

namespace locoh {

/// Serial reference loop. Kept as the baseline the OpenMP kernels are
/// checked and benchmarked against.
inline void for_each_index_serial(long count, const std::function<void(long)>& fn) {
  for (long i = 0; i < count; ++i) fn(i);
}

/// OpenMP work loop. Results must be written to disjoint, preallocated slots
/// so the output is identical to the serial reference for any worker count.
inline void for_each_index_omp(long count, int workers, const std::function<void(long)>& fn) {
#ifdef LOCOH_HAVE_OPENMP
  std::exception_ptr first_error = nullptr;
  long chunk = count / (8L * workers);
  if (chunk < 1) chunk = 1;
#pragma omp parallel for schedule(dynamic, chunk) num_threads(workers)
  for (long i = 0; i < count; ++i) {
    try {
      fn(i);
    } catch (...) {
#pragma omp critical
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);
#else
  (void)workers;
  for_each_index_serial(count, fn);
#endif
}

inline void for_each_index(long count, int workers, const std::function<void(long)>& fn) {
  if (workers > 1 && count > 1)
    for_each_index_omp(count, workers, fn);
  else
    for_each_index_serial(count, fn);
}

}  // namespace locoh

#endif
