// Compares the serial reference grid evaluator against the OpenMP kernel on
// scan-style workloads. Each configuration is timed over several repetitions
// and the best run is reported.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "pentropy/analysis.hpp"
#include "pentropy/entropies.hpp"
#include "pentropy/grid.hpp"

namespace {

using namespace pentropy;

std::vector<double> lambda_grid(double lo, double hi, double step) {
    std::vector<double> xs;
    for (double x = lo; x <= hi + 1e-12; x += step) xs.push_back(x);
    return xs;
}

double time_ms(const std::function<void()>& fn, int reps) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void run_case(const char* name, const std::vector<double>& xs,
              const std::function<double(double)>& f) {
    volatile double sink = 0.0;
    const double serial = time_ms(
        [&] {
            const auto out = evaluate_grid_serial(xs, f);
            sink = out.back();
        },
        3);
    const int threads = resolve_thread_count(0);
    const double parallel = time_ms(
        [&] {
            const auto out = evaluate_grid(xs, f, threads);
            sink = out.back();
        },
        3);
    std::printf("%-34s %7zu pts   serial %8.1f ms   parallel(%d) %8.1f ms   speedup %.2fx\n",
                name, xs.size(), serial, threads, parallel, serial / parallel);
    (void)sink;
}

}  // namespace

int main() {
    const auto dense = lambda_grid(0.5, 100.0, 0.02);
    run_case("gen_renyi1 value  (alpha=0.7)", dense,
             [](double l) { return gen_renyi1(0.7, l); });
    run_case("gen_renyi1 dH/dl  (alpha=0.7)", dense, [](double l) {
        return entropy_dlambda(EntropyKind::GenRenyi1, {l, 0.7});
    });
    run_case("renyi value       (alpha=2)", dense, [](double l) { return renyi(2.0, l); });

    const auto small_alpha = lambda_grid(0.5, 150.0, 0.1);
    run_case("gen_renyi2 value  (0.02, 0.01)", small_alpha,
             [](double l) { return gen_renyi2(0.02, 0.01, l); });
    return 0;
}
