#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pulseforge::par {

// Worker count: min(OpenMP max threads, PULSEFORGE_THREADS when set).
int max_threads();

// Static-schedule parallel loop over [0, n). Bodies must write disjoint
// slots; with identical per-index arithmetic the result is bit-identical
// to the serial loop.
template <class Body>
void parallel_for(std::size_t n, const Body& body) {
#ifdef _OPENMP
  const int nt = max_threads();
  if (nt > 1 && n > 1) {
#pragma omp parallel for schedule(static) num_threads(nt)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      body(static_cast<std::size_t>(i));
    }
    return;
  }
#endif
  for (std::size_t i = 0; i < n; ++i) body(i);
}

template <class Body>
void serial_for(std::size_t n, const Body& body) {
  for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace pulseforge::par
