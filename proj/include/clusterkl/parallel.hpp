#pragma once

namespace ckl {

// Every parallel kernel in the library keeps a serial reference path; the
// two must produce identical results (the merges are all exact and
// commutative), which the test suite checks.
enum class Execution { serial, parallel };

// Threads the OpenMP runtime will use for parallel kernels (1 when built
// without OpenMP).
int thread_count();

// Applies the CKL_THREADS environment variable, if set, as the default
// OpenMP thread count.  OMP_NUM_THREADS works as usual otherwise.
void apply_thread_env();

}  // namespace ckl
