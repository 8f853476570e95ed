#include "pentropy/asymptotics.hpp"

#include <cmath>
#include <numbers>

#include "pentropy/config.hpp"

namespace pentropy {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_asym_args(double alpha, double lambda) {
    require_lambda(lambda);
    require_order(alpha, "alpha");
}

void require_away_from_one(double value, const char* what) {
    if (std::fabs(value - 1.0) <= kOrderSeparation) throw degenerate_order(what);
}

}  // namespace

double log_psi_asymptote(double alpha, double lambda) {
    require_asym_args(alpha, lambda);
    return -0.5 * std::log(alpha) + 0.5 * (1.0 - alpha) * std::log(kTwoPi * lambda);
}

double psi_asymptote(double alpha, double lambda) {
    return std::exp(log_psi_asymptote(alpha, lambda));
}

double shannon_asymptote(double lambda) {
    require_lambda(lambda);
    return 0.5 * std::log(kTwoPi * lambda) + 0.5;
}

double renyi_asymptote(double alpha, double lambda) {
    require_asym_args(alpha, lambda);
    require_away_from_one(alpha, "renyi_asymptote requires alpha != 1");
    return 0.5 * std::log(kTwoPi * lambda) + std::log(alpha) / (2.0 * (alpha - 1.0));
}

double gen_renyi2_asymptote(double alpha, double beta, double lambda) {
    require_asym_args(alpha, lambda);
    require_order(beta, "beta");
    if (std::fabs(alpha - beta) <= kOrderSeparation)
        throw degenerate_order("gen_renyi2_asymptote requires alpha != beta");
    return 0.5 * std::log(kTwoPi * lambda) +
           (std::log(beta) - std::log(alpha)) / (2.0 * (beta - alpha));
}

double tsallis_asymptote(double alpha, double lambda) {
    require_asym_args(alpha, lambda);
    require_away_from_one(alpha, "tsallis_asymptote requires alpha != 1");
    if (alpha > 1.0) return 1.0 / (alpha - 1.0);
    return std::expm1(log_psi_asymptote(alpha, lambda)) / (1.0 - alpha);
}

double sm_asymptote(double alpha, double beta, double lambda) {
    require_asym_args(alpha, lambda);
    require_order(beta, "beta");
    require_away_from_one(alpha, "sm_asymptote requires alpha != 1");
    require_away_from_one(beta, "sm_asymptote requires beta != 1");
    if (beta > 1.0) return 1.0 / (beta - 1.0);
    const double exponent = (1.0 - beta) / (1.0 - alpha);
    return std::expm1(exponent * log_psi_asymptote(alpha, lambda)) / (1.0 - beta);
}

}  // namespace pentropy
