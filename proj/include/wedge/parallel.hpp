#pragma once

#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wedge {

// Runs fn(i) for i in [0, count); fn writes into its own preallocated slot.
// jobs <= 1 runs the plain serial loop (the reference path used by the
// determinism tests); otherwise the iterations are spread over an OpenMP
// pool.  The first exception thrown by any iteration is rethrown after the
// loop, and results never depend on jobs.
template <class Fn>
void run_indexed(long long count, int jobs, Fn&& fn) {
#ifdef _OPENMP
  if (jobs > 1) {
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (long long i = 0; i < count; ++i) {
      try {
        fn(static_cast<size_t>(i));
      } catch (...) {
#pragma omp critical
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
    return;
  }
#endif
  (void)jobs;
  for (long long i = 0; i < count; ++i) fn(static_cast<size_t>(i));
}

inline int hardware_jobs() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace wedge
