#include "lpl/threading.hpp"

#include <atomic>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lpl {

namespace {

std::atomic<int> g_override{0};

int env_cap() {
    const char* s = std::getenv("LPL_THREADS");
    if (s == nullptr) return 0;
    int n = std::atoi(s);
    return n > 0 ? n : 0;
}

} // namespace

int thread_cap() {
    int forced = g_override.load(std::memory_order_relaxed);
    if (forced > 0) return forced;
#ifdef _OPENMP
    int hw = omp_get_max_threads();
#else
    int hw = 1;
#endif
    static const int capped = env_cap();
    if (capped > 0 && capped < hw) return capped;
    return hw;
}

void set_thread_cap(int n) {
    g_override.store(n > 0 ? n : 0, std::memory_order_relaxed);
}

} // namespace lpl
