#include "pentropy/series.hpp"

#include <cmath>
#include <limits>

#include "summation.hpp"

namespace pentropy {

namespace {

constexpr double kLogFactorialTable[21] = {
    0.0,                  // ln(0!)
    0.0,                  // ln(1!)
    0.6931471805599453,   // ln(2!)
    1.791759469228055,    // ln(3!)
    3.1780538303479458,   // ln(4!)
    4.787491742782046,    // ln(5!)
    6.579251212010101,    // ln(6!)
    8.525161361065415,    // ln(7!)
    10.60460290274525,    // ln(8!)
    12.801827480081469,   // ln(9!)
    15.104412573075516,   // ln(10!)
    17.502307845873887,   // ln(11!)
    19.987214495661885,   // ln(12!)
    22.552163853123425,   // ln(13!)
    25.19122118273868,    // ln(14!)
    27.89927138384089,    // ln(15!)
    30.671860106080672,   // ln(16!)
    33.50507345013689,    // ln(17!)
    36.39544520803305,    // ln(18!)
    39.339884187199495,   // ln(19!)
    42.335616460753485,   // ln(20!)
};

std::int64_t mode_index(double lambda) {
    const double f = std::floor(lambda);
    return f < 0.0 ? 0 : static_cast<std::int64_t>(f);
}

void require_psi_params(const PoissonParams& p) {
    require_lambda(p.lambda);
    require_order(p.alpha, "alpha");
}

EvalResult make_result(double scale, double scaled_value, double scaled_tail,
                       std::int64_t terms, bool log_domain) {
    EvalResult r;
    const double factor = std::exp(scale);
    r.value = factor * scaled_value;
    r.log_value = scaled_value > 0.0 ? scale + std::log(scaled_value)
                                     : std::numeric_limits<double>::quiet_NaN();
    r.terms_used = terms;
    r.tail_bound = factor * scaled_tail;
    r.used_log_domain = log_domain;
    return r;
}

}  // namespace

double log_factorial(std::int64_t i) {
    if (i < 0) throw std::domain_error("log_factorial: negative argument");
    if (i <= 20) return kLogFactorialTable[i];
    return std::lgamma(static_cast<double>(i) + 1.0);
}

double poisson_log_pmf(std::int64_t i, double lambda) {
    require_lambda(lambda);
    if (i < 0) throw std::domain_error("poisson_log_pmf: negative index");
    if (i == 0) return -lambda;  // avoids 0 * log(lambda) noise
    return static_cast<double>(i) * std::log(lambda) - lambda - log_factorial(i);
}

PsiMoments psi_moments(const PoissonParams& params, const SeriesConfig& cfg) {
    require_psi_params(params);
    cfg.validate();

    const double alpha = params.alpha;
    const double lambda = params.lambda;
    const double log_lambda = std::log(lambda);
    const std::int64_t mode = mode_index(lambda);

    PsiMoments m;
    m.scale = alpha * poisson_log_pmf(mode, lambda);
    m.log_domain = alpha * lambda > cfg.log_domain_threshold;

    const double scale = m.scale;
    auto term = [&](std::int64_t i) -> std::array<double, 4> {
        const double L = i == 0 ? -lambda
                                : static_cast<double>(i) * log_lambda - lambda - log_factorial(i);
        const double u = std::exp(alpha * L - scale);
        const double g = static_cast<double>(i) / lambda - 1.0;  // d L / d lambda
        return {u, L * u, alpha * g * u, g * (1.0 + alpha * L) * u};
    };

    const auto out = detail::sum_mode_centered<4>(mode, cfg, term);
    m.s0 = out.sums[0];
    m.sa = out.sums[1];
    m.sl = out.sums[2];
    m.sal = out.sums[3];
    for (int c = 0; c < 4; ++c) m.tails[c] = out.tails[c];
    m.terms = out.terms;
    return m;
}

EvalResult psi(const PoissonParams& params, const SeriesConfig& cfg) {
    const PsiMoments m = psi_moments(params, cfg);
    return make_result(m.scale, m.s0, m.tails[0], m.terms, m.log_domain);
}

double log_psi(const PoissonParams& params, const SeriesConfig& cfg) {
    return psi_moments(params, cfg).log_psi();
}

EvalResult dpsi_dalpha(const PoissonParams& params, const SeriesConfig& cfg) {
    const PsiMoments m = psi_moments(params, cfg);
    return make_result(m.scale, m.sa, m.tails[1], m.terms, m.log_domain);
}

EvalResult dpsi_dlambda(const PoissonParams& params, const SeriesConfig& cfg) {
    const PsiMoments m = psi_moments(params, cfg);
    return make_result(m.scale, m.sl, m.tails[2], m.terms, m.log_domain);
}

double d2_logpsi_dalpha_dlambda(const PoissonParams& params, const SeriesConfig& cfg) {
    return psi_moments(params, cfg).d2logpsi_dalpha_dlambda();
}

}  // namespace pentropy
