// Copyright (c) 2026 the nilspec authors.
// SPDX-License-Identifier: MIT

#include "nilspec/exec.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nilspec {

int worker_count() {
#ifdef _OPENMP
  int n = omp_get_max_threads();
#else
  int n = 1;
#endif
  if (const char* env = std::getenv("NILSPEC_THREADS")) {
    try {
      int cap = std::stoi(env);
      if (cap >= 1 && cap < n) n = cap;
    } catch (...) {
      // Unparseable values leave the default in place.
    }
  }
  return n;
}

}  // namespace nilspec
