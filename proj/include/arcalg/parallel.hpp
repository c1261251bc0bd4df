#pragma once

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace arcalg {

// worker cap: ARCALG_THREADS if set, otherwise the OpenMP default
inline int thread_count() {
#ifdef _OPENMP
    if (const char* env = std::getenv("ARCALG_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace arcalg
