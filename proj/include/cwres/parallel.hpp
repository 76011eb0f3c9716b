#ifndef CWRES_PARALLEL_HPP
#define CWRES_PARALLEL_HPP

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cwres::par {

// Effective thread count: min(OpenMP max, CWRES_THREADS when set).
inline int thread_cap() {
#ifdef _OPENMP
  int n = omp_get_max_threads();
#else
  int n = 1;
#endif
  if (const char* env = std::getenv("CWRES_THREADS")) {
    try {
      int cap = std::stoi(env);
      if (cap >= 1 && cap < n) n = cap;
    } catch (...) {
    }
  }
  return n;
}

// Independent map over [0, n); every slot is written exactly once, so the
// result does not depend on the schedule.
template <class F>
void parallel_for(int n, F&& body) {
#ifdef _OPENMP
  const int threads = thread_cap();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (int i = 0; i < n; ++i) body(i);
#else
  for (int i = 0; i < n; ++i) body(i);
#endif
}

template <class F>
void serial_for(int n, F&& body) {
  for (int i = 0; i < n; ++i) body(i);
}

}  // namespace cwres::par

#endif
