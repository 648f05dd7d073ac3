#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace morse {

// Execution policy for the sweep kernels. Serial is the reference path;
// the OpenMP path runs the same loop body across threads and must produce
// bit-identical results (independent cells, fixed reduction order).
enum class Exec { Serial, OpenMP };

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace morse
