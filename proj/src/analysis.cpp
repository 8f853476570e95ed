#include "pentropy/analysis.hpp"

#include <cmath>

#include "pentropy/grid.hpp"
#include "pentropy/series.hpp"
#include "summation.hpp"

namespace pentropy {

namespace {

// The four coupled sums of the rho series, all over terms a_i = (i!)^-alpha:
//   A  = sum a_i
//   C  = sum (i-1) a_i              (so B/A - 1 = C/A with B = sum i a_i)
//   Ad = sum -ln(i!) a_i            (dA/dalpha)
//   E  = sum -(i-1) ln(i!) a_i      (dC/dalpha)
struct RhoSums {
    double a, c, ad, e;
    std::int64_t terms;
};

RhoSums rho_sums(double alpha, const SeriesConfig& cfg) {
    require_order(alpha, "alpha");
    if (alpha < 1e-6)
        throw std::domain_error("rho: alpha below 1e-6 exceeds the series budget");
    cfg.validate();

    auto term = [&](std::int64_t i) -> std::array<double, 4> {
        const double lf = log_factorial(i);
        const double a = std::exp(-alpha * lf);
        const double im1 = static_cast<double>(i) - 1.0;
        return {a, im1 * a, -lf * a, -im1 * lf * a};
    };
    const auto out = detail::sum_ascending<4>(0, cfg, term);
    return {out.sums[0], out.sums[1], out.sums[2], out.sums[3], out.terms};
}

// Entropy value and analytic lambda-derivative from shared psi moments.
std::pair<double, double> value_and_dlambda(EntropyKind kind, const PoissonParams& p,
                                            const SeriesConfig& cfg) {
    const double alpha = p.alpha;
    const double beta = p.beta;
    const double lambda = p.lambda;
    switch (kind) {
        case EntropyKind::Shannon: {
            const PsiMoments m = psi_moments({lambda, 1.0}, cfg);
            return {shannon(lambda, cfg), -m.d2logpsi_dalpha_dlambda()};
        }
        case EntropyKind::Renyi: {
            const PsiMoments m = psi_moments({lambda, alpha}, cfg);
            return {m.log_psi() / (1.0 - alpha), m.dlogpsi_dlambda() / (1.0 - alpha)};
        }
        case EntropyKind::GenRenyi1: {
            if (std::fabs(alpha - 1.0) <= kOrderSeparation) {
                const PsiMoments m = psi_moments({lambda, 1.0}, cfg);
                return {shannon(lambda, cfg), -m.d2logpsi_dalpha_dlambda()};
            }
            const PsiMoments m = psi_moments({lambda, alpha}, cfg);
            return {-m.dlogpsi_dalpha(), -m.d2logpsi_dalpha_dlambda()};
        }
        case EntropyKind::GenRenyi2: {
            const PsiMoments ma = psi_moments({lambda, alpha}, cfg);
            const PsiMoments mb = psi_moments({lambda, beta}, cfg);
            return {(ma.log_psi() - mb.log_psi()) / (beta - alpha),
                    (ma.dlogpsi_dlambda() - mb.dlogpsi_dlambda()) / (beta - alpha)};
        }
        case EntropyKind::Tsallis: {
            const PsiMoments m = psi_moments({lambda, alpha}, cfg);
            const double lp = m.log_psi();
            return {std::expm1(lp) / (1.0 - alpha),
                    std::exp(lp) * m.dlogpsi_dlambda() / (1.0 - alpha)};
        }
        case EntropyKind::SharmaMittal: {
            const PsiMoments m = psi_moments({lambda, alpha}, cfg);
            const double exponent = (1.0 - beta) / (1.0 - alpha);
            const double lp = m.log_psi();
            return {std::expm1(exponent * lp) / (1.0 - beta),
                    std::exp(exponent * lp) * m.dlogpsi_dlambda() / (1.0 - alpha)};
        }
    }
    throw std::logic_error("unreachable entropy kind");
}

int sign_of(double x) { return x > 0.0 ? 1 : (x < 0.0 ? -1 : 0); }

}  // namespace

double rho(double alpha, const SeriesConfig& cfg) {
    const RhoSums s = rho_sums(alpha, cfg);
    return alpha * s.c / s.a;
}

double rho_prime(double alpha, const SeriesConfig& cfg) {
    const RhoSums s = rho_sums(alpha, cfg);
    return s.c / s.a + alpha * (s.e * s.a - s.ad * s.c) / (s.a * s.a);
}

RhoPoint rho_point(double alpha, const SeriesConfig& cfg) {
    const RhoSums s = rho_sums(alpha, cfg);
    RhoPoint p;
    p.alpha = alpha;
    p.rho = alpha * s.c / s.a;
    p.rho_prime = s.c / s.a + alpha * (s.e * s.a - s.ad * s.c) / (s.a * s.a);
    return p;
}

double entropy_dlambda(EntropyKind kind, const PoissonParams& params, const SeriesConfig& cfg,
                       DerivativeMode mode) {
    validate_query({kind, params, cfg});
    if (mode == DerivativeMode::Analytic) return value_and_dlambda(kind, params, cfg).second;

    const double h = 1e-6 * std::max(1.0, params.lambda);
    PoissonParams hi = params;
    PoissonParams lo = params;
    hi.lambda += h;
    lo.lambda -= h;
    const double up = evaluate({kind, hi, cfg}).value;
    const double dn = evaluate({kind, lo, cfg}).value;
    return (up - dn) / (2.0 * h);
}

ScanReport scan_monotonicity(EntropyKind kind, const PoissonParams& orders, double lambda_lo,
                             double lambda_hi, double step, const SeriesConfig& cfg,
                             double tol_deriv) {
    if (!(lambda_lo > 0.0) || !(lambda_hi > lambda_lo) || !(step > 0.0))
        throw std::domain_error("scan requires 0 < lambda_lo < lambda_hi and step > 0");
    PoissonParams probe = orders;
    probe.lambda = lambda_lo;
    validate_query({kind, probe, cfg});

    const auto n = static_cast<std::size_t>(std::floor((lambda_hi - lambda_lo) / step + 0.5)) + 1;
    if (n < 3) throw empty_grid("scan grid needs at least 3 points");

    ScanReport report;
    report.grid.resize(n);
    report.values.resize(n);
    report.derivatives.resize(n);
    for (std::size_t k = 0; k < n; ++k) report.grid[k] = lambda_lo + static_cast<double>(k) * step;

    parallel_for_index(n, 0, [&](std::size_t k) {
        PoissonParams p = orders;
        p.lambda = report.grid[k];
        const auto [value, deriv] = value_and_dlambda(kind, p, cfg);
        report.values[k] = value;
        report.derivatives[k] = deriv;
    });

    // maximal runs of derivative < -tol
    std::size_t k = 0;
    while (k < n) {
        if (report.derivatives[k] < -tol_deriv) {
            std::size_t end = k;
            while (end + 1 < n && report.derivatives[end + 1] < -tol_deriv) ++end;
            report.decreasing_intervals.emplace_back(report.grid[k], report.grid[end]);
            k = end + 1;
        } else {
            ++k;
        }
    }

    auto deriv_at = [&](double lambda) {
        PoissonParams p = orders;
        p.lambda = lambda;
        return value_and_dlambda(kind, p, cfg).second;
    };
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const int s0 = sign_of(report.derivatives[i]);
        const int s1 = sign_of(report.derivatives[i + 1]);
        if (s0 == 0 || s1 == 0 || s0 == s1) continue;
        double a = report.grid[i];
        double b = report.grid[i + 1];
        double fa = report.derivatives[i];
        while (b - a > 1e-6) {
            const double mid = 0.5 * (a + b);
            const double fm = deriv_at(mid);
            if (sign_of(fm) == sign_of(fa)) {
                a = mid;
                fa = fm;
            } else {
                b = mid;
            }
        }
        Extremum e;
        e.lambda = 0.5 * (a + b);
        e.kind = s0 < 0 ? ExtremumKind::Minimum : ExtremumKind::Maximum;
        report.extrema.push_back(e);
    }
    return report;
}

ScanReport gen_renyi2_anomaly_probe(double alpha, double beta, double lambda_lo,
                                    double lambda_hi, double step, const SeriesConfig& cfg) {
    require_order(alpha, "alpha");
    require_order(beta, "beta");
    const bool mixed = (alpha <= 1.0 && beta > 1.0) || (alpha > 1.0 && beta <= 1.0);
    if (!mixed)
        return scan_monotonicity(EntropyKind::GenRenyi2, {lambda_lo, alpha, beta}, lambda_lo,
                                 lambda_hi, step, cfg);

    // proven monotone increasing: evaluate the grid, report no anomalies
    if (!(lambda_lo > 0.0) || !(lambda_hi > lambda_lo) || !(step > 0.0))
        throw std::domain_error("scan requires 0 < lambda_lo < lambda_hi and step > 0");
    const auto n = static_cast<std::size_t>(std::floor((lambda_hi - lambda_lo) / step + 0.5)) + 1;
    if (n < 3) throw empty_grid("scan grid needs at least 3 points");

    ScanReport report;
    report.grid.resize(n);
    report.values.resize(n);
    report.derivatives.resize(n);
    for (std::size_t k = 0; k < n; ++k) report.grid[k] = lambda_lo + static_cast<double>(k) * step;
    parallel_for_index(n, 0, [&](std::size_t k) {
        const auto [value, deriv] = value_and_dlambda(
            EntropyKind::GenRenyi2, {report.grid[k], alpha, beta}, cfg);
        report.values[k] = value;
        report.derivatives[k] = deriv;
    });
    return report;
}

double locate_rho_prime_root(double alpha_lo, double alpha_hi, double tol,
                             const SeriesConfig& cfg) {
    if (!(alpha_lo > 0.0) || !(alpha_hi > alpha_lo) || !(tol > 0.0))
        throw std::domain_error("locate_rho_prime_root: bad bracket");
    double fa = rho_prime(alpha_lo, cfg);
    double fb = rho_prime(alpha_hi, cfg);
    if (sign_of(fa) == 0) return alpha_lo;
    if (sign_of(fb) == 0) return alpha_hi;
    if (sign_of(fa) == sign_of(fb))
        throw std::domain_error("locate_rho_prime_root: endpoints do not bracket a sign change");
    double a = alpha_lo;
    double b = alpha_hi;
    while (b - a > tol) {
        const double mid = 0.5 * (a + b);
        const double fm = rho_prime(mid, cfg);
        if (sign_of(fm) == 0) return mid;
        if (sign_of(fm) == sign_of(fa)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace pentropy
