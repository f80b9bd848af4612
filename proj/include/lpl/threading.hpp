#pragma once

namespace lpl {

// Number of threads the parallel kernels may use. Defaults to the OpenMP
// maximum, capped by the LPL_THREADS environment variable when set.
int thread_cap();

// Override the cap for the current process (0 restores the default).
void set_thread_cap(int n);

} // namespace lpl
