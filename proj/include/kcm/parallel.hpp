// SPDX-License-Identifier: MIT
//
// Minimal execution-policy layer.
//
// Every parallel kernel in this project is written as an index loop where
// iteration i writes only to slot i of a preallocated output.  Under that
// contract the OpenMP and serial paths produce bitwise-identical results,
// which the test suite checks.  The serial path is kept as the reference
// implementation; the benchmark tool compares the two.

#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kcm {

enum class Exec {
    Serial,    // reference implementation, plain loop
    Parallel,  // OpenMP if compiled in, otherwise falls back to serial
};

inline void set_max_threads(int jobs) {
#ifdef _OPENMP
    if (jobs > 0) omp_set_num_threads(jobs);
#else
    (void)jobs;
#endif
}

inline bool parallel_available() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

template <class Body>
void parallel_for(int n, Exec policy, Body&& body) {
    if (policy == Exec::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
        for (int i = 0; i < n; ++i) body(i);
        return;
#endif
    }
    for (int i = 0; i < n; ++i) body(i);
}

} // namespace kcm
