#include "pulseforge/parallel.hpp"

#include <cstdlib>
#include <string>

namespace pulseforge::par {

int max_threads() {
#ifdef _OPENMP
  int n = omp_get_max_threads();
#else
  int n = 1;
#endif
  if (const char* env = std::getenv("PULSEFORGE_THREADS")) {
    try {
      const int cap = std::stoi(env);
      if (cap >= 1 && cap < n) n = cap;
    } catch (...) {
      // malformed value: ignore the cap
    }
  }
  return n < 1 ? 1 : n;
}

}  // namespace pulseforge::par
