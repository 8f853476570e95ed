#pragma once

// One-parameter Mittag-Leffler function E_alpha(x) = sum_k x^k / Gamma(alpha k + 1)
// for alpha > 0 and x >= 0, as needed by the Renyi upper bounds.

#include "pentropy/config.hpp"

namespace pentropy {

// Direct series for moderate arguments; for x^(1/alpha) above the crossover
// the leading asymptotic E_alpha(x) ~ (1/alpha) exp(x^(1/alpha)) is used and
// the result is reported through log_value (value itself may overflow).
EvalResult ml(double alpha, double x, const SeriesConfig& cfg = {});

// ln E_alpha(x); finite for x^(1/alpha) up to ~700.
double log_ml(double alpha, double x, const SeriesConfig& cfg = {});

}  // namespace pentropy
