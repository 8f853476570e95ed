#pragma once

// Parallel evaluation of independent grid points. Every point is computed by
// a pure function of its own inputs, so outputs are bitwise identical for any
// thread count; the serial variant is kept as the reference the parallel
// kernel is tested and benchmarked against.

#include <cstddef>
#include <functional>
#include <vector>

namespace pentropy {

// Effective worker count: an explicit positive request wins; otherwise the
// PE_THREADS environment variable (0 or unset = auto) capped by the OpenMP
// default; 1 when built without OpenMP.
int resolve_thread_count(int requested = 0);

// Runs fn(i) for i in [0, n) across threads; exceptions from workers are
// captured and the first one is rethrown after the loop completes.
void parallel_for_index(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

std::vector<double> evaluate_grid(const std::vector<double>& xs,
                                  const std::function<double(double)>& f, int threads = 0);

// Reference implementation: same contract, plain loop.
std::vector<double> evaluate_grid_serial(const std::vector<double>& xs,
                                         const std::function<double(double)>& f);

}  // namespace pentropy
