#include "pentropy/bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "pentropy/entropies.hpp"
#include "pentropy/mittag_leffler.hpp"
#include "pentropy/series.hpp"

namespace pentropy {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kGammaCeiling = 1.0 - 1e-6;  // keeps -log(gamma) bounded away from 0

void require_lambda_above_one(double lambda) {
    require_lambda(lambda);
    if (!(lambda > 1.0)) throw std::domain_error("bound requires lambda > 1");
}

void require_order_not_one(double alpha, const char* what) {
    if (std::fabs(alpha - 1.0) <= kOrderSeparation) throw degenerate_order(what);
}

double d_constant(double alpha, double gamma) {
    const double b = std::fabs(alpha - 1.0) / 2.0;
    return std::pow(std::numbers::pi * std::fabs(alpha - 1.0) /
                        (-std::numbers::e * alpha * std::log(gamma)),
                    b);
}

// Enhanced upper bound on mu(lambda): e^h(lambda) / sqrt(2 pi lambda).
double mu_upper(double lambda) {
    return std::exp(h_correction(lambda)) / std::sqrt(kTwoPi * lambda);
}

// Lower bound (m^(order-1) - 1) / (1 - order) shared by the Tsallis and
// Sharma-Mittal estimates.
double power_family_lower(double order, double lambda) {
    const double m = mu_upper(lambda);
    return std::expm1((order - 1.0) * std::log(m)) / (1.0 - order);
}

}  // namespace

BoundSet make_bound_set(double lower, std::optional<double> upper,
                        std::optional<MittagLefflerConstants> constants) {
    if (upper && !(lower <= *upper))
        throw std::logic_error("BoundSet: lower exceeds upper");
    BoundSet b;
    b.lower = lower;
    b.upper = upper;
    b.constants = constants;
    return b;
}

double gamma_star() {
    return std::exp(-(std::numbers::pi / std::numbers::e) * std::expm1(1.0 / 6.0));
}

double max_prob(double lambda) {
    require_lambda(lambda);
    const auto mode = static_cast<std::int64_t>(std::floor(lambda));
    return std::exp(poisson_log_pmf(mode, lambda));
}

double h_correction(double lambda) {
    require_lambda(lambda);
    return 0.5 * std::log1p(1.0 / std::max(lambda - 1.0, 1.0)) - 1.0 / (12.0 * lambda + 1.0);
}

double lower_bound_log_family(double lambda) {
    require_lambda_above_one(lambda);
    return 0.5 * std::log(kTwoPi * lambda) - h_correction(lambda);
}

double upper_bound_shannon(double lambda) {
    require_lambda_above_one(lambda);
    return 0.5 * std::log(kTwoPi * lambda) + 1.0 + 1.0 / (6.0 * lambda);
}

BoundSet shannon_bounds(double lambda) {
    return make_bound_set(lower_bound_log_family(lambda), upper_bound_shannon(lambda));
}

double upper_bound_renyi(double alpha, double lambda, double gamma, const SeriesConfig& cfg) {
    require_lambda_above_one(lambda);
    require_order(alpha, "alpha");
    require_order_not_one(alpha, "renyi bound requires alpha != 1");
    if (!(gamma >= gamma_star()) || !(gamma <= kGammaCeiling))
        throw gamma_out_of_range("gamma must lie in [gamma_star, 1 - 1e-6]");

    const double base = alpha < 1.0 ? alpha * lambda / gamma : alpha * gamma * lambda;
    const double x = std::exp(alpha * std::log(base));
    // base > 30 whenever x is not representable, so the asymptotic log form applies
    const double log_e = std::isfinite(x) ? log_ml(alpha, x, cfg) : base - std::log(alpha);

    const double common = 0.5 * std::log(std::numbers::pi / (-std::numbers::e * std::log(gamma)));
    if (alpha < 1.0) {
        return (log_e - alpha * lambda) / (1.0 - alpha) + common +
               alpha * std::log(alpha) / (2.0 * (1.0 - alpha)) +
               1.0 / (12.0 * alpha * (1.0 - alpha)) + 0.5 * std::log(1.0 - alpha);
    }
    return (alpha * lambda - log_e) / (alpha - 1.0) + common -
           alpha * std::log(alpha) / (2.0 * (alpha - 1.0)) + alpha / (12.0 * (alpha - 1.0)) +
           0.5 * std::log(alpha - 1.0);
}

BoundSet renyi_bounds(double alpha, double lambda, double gamma, const SeriesConfig& cfg) {
    const double upper = upper_bound_renyi(alpha, lambda, gamma, cfg);
    const double d = d_constant(alpha, gamma);
    MittagLefflerConstants constants;
    constants.gamma = gamma;
    constants.d = d;
    constants.c = alpha < 1.0 ? std::sqrt(alpha) * std::exp(1.0 / (12.0 * alpha)) * d
                              : std::sqrt(alpha) * std::exp(-alpha / 12.0) / d;
    return make_bound_set(lower_bound_log_family(lambda), upper, constants);
}

double optimal_gamma(double alpha, double lambda_max, const SeriesConfig& cfg) {
    if (!(lambda_max > 1.0)) throw std::domain_error("optimal_gamma requires lambda_max > 1");
    require_order(alpha, "alpha");
    require_order_not_one(alpha, "optimal_gamma requires alpha != 1");

    constexpr int kGridPoints = 200;
    const double log_max = std::log(lambda_max);
    std::vector<double> lambdas(kGridPoints);
    std::vector<double> entropies(kGridPoints);
    for (int j = 0; j < kGridPoints; ++j) {
        lambdas[j] = std::exp(log_max * (j + 1) / kGridPoints);
        entropies[j] = renyi(alpha, lambdas[j], cfg);
    }

    auto sup_gap = [&](double gamma) {
        double gap = -std::numeric_limits<double>::infinity();
        for (int j = 0; j < kGridPoints; ++j)
            gap = std::max(gap, upper_bound_renyi(alpha, lambdas[j], gamma, cfg) - entropies[j]);
        return gap;
    };

    constexpr double kInvPhi = 0.6180339887498949;
    double a = gamma_star();
    double b = kGammaCeiling;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = sup_gap(c);
    double fd = sup_gap(d);
    while (b - a > 1e-4) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = sup_gap(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = sup_gap(d);
        }
    }
    return 0.5 * (a + b);
}

BoundSet tsallis_bounds(double alpha, double lambda) {
    require_lambda_above_one(lambda);
    require_order(alpha, "alpha");
    require_order_not_one(alpha, "tsallis bound requires alpha != 1");
    const double lower = power_family_lower(alpha, lambda);
    if (alpha > 1.0) return make_bound_set(lower, 1.0 / (alpha - 1.0));
    return make_bound_set(lower, std::nullopt);
}

BoundSet sharma_mittal_bounds(double alpha, double beta, double lambda) {
    require_lambda_above_one(lambda);
    require_order(alpha, "alpha");
    require_order(beta, "beta");
    require_order_not_one(beta, "sharma_mittal bound requires beta != 1");
    const double lower = power_family_lower(beta, lambda);
    if (beta > 1.0) return make_bound_set(lower, 1.0 / (beta - 1.0));
    return make_bound_set(lower, std::nullopt);
}

}  // namespace pentropy
