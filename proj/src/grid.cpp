#include "pentropy/grid.hpp"

#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace pentropy {

namespace {

int hardware_default() {
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

int env_thread_cap() {
    const char* env = std::getenv("PE_THREADS");
    if (env == nullptr || *env == '\0') return 0;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 0) return 0;  // malformed or negative: auto
    return static_cast<int>(v);
}

}  // namespace

int resolve_thread_count(int requested) {
    if (requested > 0) return requested;
    const int cap = env_thread_cap();
    if (cap > 0) return cap;
    return hardware_default();
}

void parallel_for_index(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
    const int workers = resolve_thread_count(threads);
    std::exception_ptr first_error = nullptr;
    std::mutex error_mutex;

    auto guarded = [&](std::size_t i) {
        try {
            fn(i);
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
        }
    };

#if defined(_OPENMP)
    if (workers > 1) {
#pragma omp parallel for schedule(dynamic, 16) num_threads(workers)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i)
            guarded(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < n; ++i) guarded(i);
    }
#else
    (void)workers;
    for (std::size_t i = 0; i < n; ++i) guarded(i);
#endif

    if (first_error) std::rethrow_exception(first_error);
}

std::vector<double> evaluate_grid(const std::vector<double>& xs,
                                  const std::function<double(double)>& f, int threads) {
    std::vector<double> out(xs.size());
    parallel_for_index(xs.size(), threads, [&](std::size_t i) { out[i] = f(xs[i]); });
    return out;
}

std::vector<double> evaluate_grid_serial(const std::vector<double>& xs,
                                         const std::function<double(double)>& f) {
    std::vector<double> out(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = f(xs[i]);
    return out;
}

}  // namespace pentropy
