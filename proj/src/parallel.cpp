#include "hypercone/parallel.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace hypercone {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("HYPERCONE_THREADS")) {
    try {
      int value = std::stoi(env);
      if (value > 0) return value;
    } catch (const std::exception&) {
    }
  }
  int fallback = omp_get_max_threads();
  return fallback > 0 ? fallback : 1;
}

}  // namespace hypercone
