#include "pentropy/mittag_leffler.hpp"

#include <cmath>
#include <limits>

#include "summation.hpp"

namespace pentropy {

namespace {

// Above this value of x^(1/alpha) the neglected corrections to the leading
// exponential are below 1e-13 relative for the orders the bounds use.
constexpr double kAsymptoticCrossover = 30.0;

void require_ml_args(double alpha, double x) {
    require_order(alpha, "alpha");
    if (!(x >= 0.0)) throw std::domain_error("ml: x must be nonnegative");
}

}  // namespace

EvalResult ml(double alpha, double x, const SeriesConfig& cfg) {
    require_ml_args(alpha, x);
    cfg.validate();

    EvalResult r;
    if (x == 0.0) {
        r.value = 1.0;
        r.log_value = 0.0;
        r.terms_used = 1;
        return r;
    }

    const double root = std::exp(std::log(x) / alpha);  // x^(1/alpha)
    if (root > kAsymptoticCrossover) {
        r.log_value = root - std::log(alpha);
        r.value = std::exp(r.log_value);
        r.terms_used = 0;
        r.used_log_domain = true;
        return r;
    }

    const double log_x = std::log(x);
    auto term = [&](std::int64_t k) -> std::array<double, 1> {
        return {std::exp(static_cast<double>(k) * log_x -
                         std::lgamma(alpha * static_cast<double>(k) + 1.0))};
    };
    const auto out = detail::sum_ascending<1>(0, cfg, term);
    r.value = out.sums[0];
    r.log_value = std::log(r.value);
    r.terms_used = out.terms;
    r.tail_bound = out.tails[0];
    return r;
}

double log_ml(double alpha, double x, const SeriesConfig& cfg) {
    require_ml_args(alpha, x);
    if (x == 0.0) return 0.0;
    const double root = std::exp(std::log(x) / alpha);
    if (root > kAsymptoticCrossover) return root - std::log(alpha);
    return ml(alpha, x, cfg).log_value;
}

}  // namespace pentropy
