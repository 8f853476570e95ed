#pragma once

// Lower and upper bounds for the entropies, plus the maximal-probability
// helper mu(lambda). All bound operations require lambda > 1; refusal rather
// than extrapolation below that.

#include <optional>

#include "pentropy/config.hpp"

namespace pentropy {

// Constants entering the Mittag-Leffler upper bound, kept for reporting.
struct MittagLefflerConstants {
    double gamma = 0.0;
    double d = 0.0;  // D(alpha, gamma)
    double c = 0.0;  // C1(alpha, gamma) for alpha < 1, C2(alpha, gamma) for alpha > 1
};

struct BoundSet {
    double lower = 0.0;
    std::optional<double> upper;
    std::optional<MittagLefflerConstants> constants;
};

// Checked constructor; lower <= upper is a structural guarantee.
BoundSet make_bound_set(double lower, std::optional<double> upper,
                        std::optional<MittagLefflerConstants> constants = std::nullopt);

// Threshold gamma_* = exp(-(pi/e)(e^(1/6) - 1)) ~ 0.811 below which the
// Mittag-Leffler bound constants lose validity.
double gamma_star();

// mu(lambda) = lambda^floor(lambda) e^-lambda / floor(lambda)!, the maximal
// Poisson probability; below 1/sqrt(2 pi floor(lambda)) for lambda >= 1.
double max_prob(double lambda);

// h(lambda) = (1/2) log(1 + 1/max(lambda-1, 1)) - 1/(12 lambda + 1).
double h_correction(double lambda);

// L(lambda) = (1/2) log(2 pi lambda) - h(lambda); valid simultaneously for
// the Shannon, Renyi and both generalized Renyi entropies, lambda > 1.
double lower_bound_log_family(double lambda);

// U_SH(lambda) = (1/2) log(2 pi lambda) + 1 + 1/(6 lambda), lambda > 1.
double upper_bound_shannon(double lambda);

BoundSet shannon_bounds(double lambda);

// Mittag-Leffler upper bound for the Renyi entropy with the shared L(lambda)
// as lower bound; gamma must lie in [gamma_star, 1 - 1e-6].
BoundSet renyi_bounds(double alpha, double lambda, double gamma,
                      const SeriesConfig& cfg = {});

double upper_bound_renyi(double alpha, double lambda, double gamma,
                         const SeriesConfig& cfg = {});

// Minimizes sup over a 200-point log grid on (1, lambda_max] of the gap
// U_R - H_R by golden-section search on gamma, to 1e-4 absolute.
double optimal_gamma(double alpha, double lambda_max, const SeriesConfig& cfg = {});

// Two-sided control of the Tsallis entropy via the enhanced mu bound
// m(lambda) = e^h(lambda) / sqrt(2 pi lambda): lower = (m^(alpha-1) - 1)/(1-alpha),
// upper = 1/(alpha-1) when alpha > 1, absent otherwise.
BoundSet tsallis_bounds(double alpha, double lambda);

// Same with beta driving the exponent and the ceiling 1/(beta-1).
BoundSet sharma_mittal_bounds(double alpha, double beta, double lambda);

}  // namespace pentropy
