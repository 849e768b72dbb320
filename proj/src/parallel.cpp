#include "iwa/parallel.hpp"

#include <atomic>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace iwa {

namespace {
ExecMode g_mode = ExecMode::Parallel;
}

ExecMode default_exec_mode() { return g_mode; }
void set_default_exec_mode(ExecMode mode) { g_mode = mode; }

int worker_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void parallel_for(size_t n, const std::function<void(size_t)>& f, ExecMode mode) {
#ifdef _OPENMP
    if (mode == ExecMode::Parallel && n > 1) {
        std::exception_ptr error;
        std::atomic<bool> failed{false};
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < (long long)n; ++i) {
            if (failed.load(std::memory_order_relaxed)) continue;
            try {
                f(size_t(i));
            } catch (...) {
                if (!failed.exchange(true)) error = std::current_exception();
            }
        }
        if (error) std::rethrow_exception(error);
        return;
    }
#endif
    (void)mode;
    for (size_t i = 0; i < n; ++i) f(i);
}

template <class T>
std::vector<T> parallel_map(size_t n, const std::function<T(size_t)>& f, ExecMode mode) {
    std::vector<T> out(n);
    parallel_for(n, [&](size_t i) { out[i] = f(i); }, mode);
    return out;
}

template std::vector<SweepOutcome> parallel_map<SweepOutcome>(
    size_t, const std::function<SweepOutcome(size_t)>&, ExecMode);

std::vector<SweepOutcome> sweep(size_t n, const std::function<SweepOutcome(size_t)>& f,
                                ExecMode mode) {
    return parallel_map<SweepOutcome>(n, f, mode);
}

}  // namespace iwa
