#pragma once

// Stable evaluation of the Poisson pmf, the power sum
//   psi(alpha, lambda) = sum_i p_i(lambda)^alpha,
// and its first and mixed partial derivatives. Everything else in the
// library is built on these sums.

#include <cmath>
#include <cstdint>

#include "pentropy/config.hpp"

namespace pentropy {

// ln(i!) = lnGamma(i+1); exact table for i <= 20, lgamma beyond.
double log_factorial(std::int64_t i);

// ln p_i(lambda) = i ln(lambda) - lambda - ln(i!).
double poisson_log_pmf(std::int64_t i, double lambda);

// The four coupled sums behind psi, evaluated in one mode-centered pass and
// scaled by exp(-scale) with scale = alpha * ln p_mode, so the mode term is 1
// and ratios of sums are immune to under/overflow of psi itself.
struct PsiMoments {
    double scale = 0.0;  // alpha * ln p_mode
    double s0 = 0.0;     // e^{-scale} * psi
    double sa = 0.0;     // e^{-scale} * d psi / d alpha
    double sl = 0.0;     // e^{-scale} * d psi / d lambda
    double sal = 0.0;    // e^{-scale} * d^2 psi / d alpha d lambda
    double tails[4] = {0.0, 0.0, 0.0, 0.0};  // scaled tail estimates per component
    std::int64_t terms = 0;
    bool log_domain = false;

    double log_psi() const { return scale + std::log(s0); }
    double dlogpsi_dalpha() const { return sa / s0; }
    double dlogpsi_dlambda() const { return sl / s0; }
    double d2logpsi_dalpha_dlambda() const { return sal / s0 - (sl / s0) * (sa / s0); }
};

PsiMoments psi_moments(const PoissonParams& params, const SeriesConfig& cfg);

EvalResult psi(const PoissonParams& params, const SeriesConfig& cfg);

// ln psi computed natively in the scaled domain, never as log(psi().value).
double log_psi(const PoissonParams& params, const SeriesConfig& cfg);

// Term-by-term derivative sum_i p_i^alpha ln p_i; negative for every
// non-degenerate Poisson distribution.
EvalResult dpsi_dalpha(const PoissonParams& params, const SeriesConfig& cfg);

// Term-by-term derivative alpha e^{-alpha lambda} sum_i (i - lambda)
// lambda^{alpha i - 1} / (i!)^alpha; positive for alpha < 1, negative for
// alpha > 1, identically 0 at alpha = 1.
EvalResult dpsi_dlambda(const PoissonParams& params, const SeriesConfig& cfg);

// Mixed partial of ln psi, combined from the four term-by-term sums by the
// quotient rule.
double d2_logpsi_dalpha_dlambda(const PoissonParams& params, const SeriesConfig& cfg);

}  // namespace pentropy
