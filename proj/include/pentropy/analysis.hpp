#pragma once

// Numerical machinery for the anomalous-behavior results: rho(alpha) and its
// derivative, the lambda-derivative of each entropy, monotonicity scanning
// and local-extremum detection.

#include <utility>
#include <vector>

#include "pentropy/config.hpp"
#include "pentropy/entropies.hpp"

namespace pentropy {

enum class ExtremumKind { Minimum, Maximum };

struct Extremum {
    double lambda = 0.0;
    ExtremumKind kind = ExtremumKind::Minimum;
};

struct ScanReport {
    std::vector<double> grid;         // strictly ascending lambda values
    std::vector<double> values;       // entropy at each grid point
    std::vector<double> derivatives;  // dH/dlambda at each grid point
    std::vector<std::pair<double, double>> decreasing_intervals;
    std::vector<Extremum> extrema;
};

struct RhoPoint {
    double alpha = 0.0;
    double rho = 0.0;
    double rho_prime = 0.0;
};

enum class DerivativeMode { Analytic, FiniteDifference };

// rho(alpha) = alpha (sum_i i/(i!)^alpha / sum_i 1/(i!)^alpha - 1), the
// lambda-derivative of log psi at lambda = 1. Positive on (0,1), zero at 1.
// Refuses alpha < 1e-6 (the series outgrows the default term cap below that).
double rho(double alpha, const SeriesConfig& cfg = {});

// d rho / d alpha from the term-by-term differentiated series.
double rho_prime(double alpha, const SeriesConfig& cfg = {});

RhoPoint rho_point(double alpha, const SeriesConfig& cfg = {});

// dH/dlambda for any entropy kind; the analytic route goes through the psi
// moment sums, the fallback is a centered difference with step
// 1e-6 * max(1, lambda).
double entropy_dlambda(EntropyKind kind, const PoissonParams& params,
                       const SeriesConfig& cfg = {},
                       DerivativeMode mode = DerivativeMode::Analytic);

// Evaluates the entropy and its lambda-derivative over the grid
// lo, lo+step, ..., hi; decreasing intervals are maximal runs of
// derivative < -tol_deriv, extrema are derivative sign changes refined by
// bisection to 1e-6 in lambda. Grid points are evaluated in parallel.
ScanReport scan_monotonicity(EntropyKind kind, const PoissonParams& orders, double lambda_lo,
                             double lambda_hi, double step, const SeriesConfig& cfg = {},
                             double tol_deriv = 1e-10);

// For mixed-regime orders (alpha <= 1 < beta or alpha > 1 >= beta) the
// entropy is provably increasing and the report carries no intervals or
// extrema; same-regime orders are scanned.
ScanReport gen_renyi2_anomaly_probe(double alpha, double beta, double lambda_lo,
                                    double lambda_hi, double step,
                                    const SeriesConfig& cfg = {});

// Bisection root of rho_prime on [alpha_lo, alpha_hi]; the endpoints must
// bracket a sign change.
double locate_rho_prime_root(double alpha_lo, double alpha_hi, double tol,
                             const SeriesConfig& cfg = {});

}  // namespace pentropy
