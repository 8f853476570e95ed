// Acceptance suite: one line per criterion, each run at its stated tolerance
// and wall-clock budget. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "golden_io.hpp"
#include "pentropy/analysis.hpp"
#include "pentropy/asymptotics.hpp"
#include "pentropy/bounds.hpp"
#include "pentropy/entropies.hpp"
#include "pentropy/mittag_leffler.hpp"
#include "pentropy/series.hpp"

using namespace pentropy;

namespace {

struct Checker {
    int fails = 0;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            ++fails;
            std::printf("    FAIL: %s\n", what.c_str());
        }
    }
};

int g_criteria_failed = 0;

void run_criterion(int number, const char* name, double budget_seconds,
                   const std::function<void(Checker&)>& body) {
    Checker c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.require(false, std::string("unexpected exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (elapsed >= budget_seconds)
        c.require(false, "runtime " + std::to_string(elapsed) + " s exceeds budget " +
                             std::to_string(budget_seconds) + " s");
    std::printf("criterion %d (%s): %s  [%.2f s]\n", number, name,
                c.fails == 0 ? "PASS" : "FAIL", elapsed);
    if (c.fails != 0) ++g_criteria_failed;
}

std::string describe(const golden::Row& r) {
    std::string s = r.op;
    if (r.alpha) s += " alpha=" + std::to_string(*r.alpha);
    if (r.beta) s += " beta=" + std::to_string(*r.beta);
    if (r.lambda) s += " lambda=" + std::to_string(*r.lambda);
    return s;
}

const double kOrderGrid[] = {0.1, 0.5, 0.9, 1.1, 2.0, 5.0};
const double kLambdaGrid[] = {0.1, 1.0, 2.0, 10.0, 100.0};

bool intersects(const std::pair<double, double>& iv, double lo, double hi) {
    return iv.first <= hi && iv.second >= lo;
}

int cli_exit_code(const std::string& args) {
    const std::string cmd =
        std::string(PENTROPY_CLI_PATH) + " " + args + " >/dev/null 2>/dev/null";
    return WEXITSTATUS(std::system(cmd.c_str()));
}

std::string cli_capture(const std::string& args) {
    const std::string cmd = std::string(PENTROPY_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return {};
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
    pclose(pipe);
    return out;
}

void criterion_oracle(Checker& c) {
    const SeriesConfig cfg{};
    int rows_checked = 0;
    for (const auto& r : golden::rows()) {
        double got;
        double tol = 1e-10;
        if (r.op == "poisson_log_pmf") {
            got = poisson_log_pmf(10, *r.lambda);
        } else if (r.op == "psi") {
            got = psi({*r.lambda, *r.alpha}, cfg).value;
        } else if (r.op == "log_psi") {
            got = log_psi({*r.lambda, *r.alpha}, cfg);
        } else if (r.op == "dpsi_dalpha") {
            got = dpsi_dalpha({*r.lambda, *r.alpha}, cfg).value;
            tol = 1e-8;
        } else if (r.op == "dpsi_dlambda") {
            got = dpsi_dlambda({*r.lambda, *r.alpha}, cfg).value;
            tol = 1e-8;
        } else if (r.op == "d2_logpsi_dalpha_dlambda") {
            got = d2_logpsi_dalpha_dlambda({*r.lambda, *r.alpha}, cfg);
            tol = 1e-8;
        } else if (r.op == "shannon") {
            got = shannon(*r.lambda, cfg);
        } else if (r.op == "renyi") {
            got = renyi(*r.alpha, *r.lambda, cfg);
        } else if (r.op == "gen_renyi1") {
            got = gen_renyi1(*r.alpha, *r.lambda, cfg);
        } else if (r.op == "gen_renyi2") {
            got = gen_renyi2(*r.alpha, *r.beta, *r.lambda, cfg);
        } else if (r.op == "tsallis") {
            got = tsallis(*r.alpha, *r.lambda, cfg);
        } else if (r.op == "sharma_mittal") {
            got = sharma_mittal(*r.alpha, *r.beta, *r.lambda, cfg);
        } else if (r.op == "ml") {
            got = ml(*r.alpha, *r.lambda, cfg).value;
        } else if (r.op == "log_ml") {
            got = log_ml(*r.alpha, *r.lambda, cfg);
        } else if (r.op == "rho") {
            got = rho(*r.alpha, cfg);
        } else if (r.op == "rho_prime") {
            got = rho_prime(*r.alpha, cfg);
            tol = 1e-8;
        } else {
            c.require(false, "unknown golden op " + r.op);
            continue;
        }
        ++rows_checked;
        const double err = golden::rel_err(got, r.value);
        if (err >= tol)
            c.require(false, describe(r) + " rel err " + std::to_string(err));
    }
    c.require(rows_checked >= 40, "golden file must cover at least 40 cases");
}

void criterion_positivity(Checker& c) {
    for (double lambda : kLambdaGrid) {
        const double floor = -std::log(max_prob(lambda));
        c.require(shannon(lambda) > 0.0, "shannon positivity");
        c.require(shannon(lambda) >= floor, "shannon >= -log mu");
        for (double alpha : kOrderGrid) {
            c.require(renyi(alpha, lambda) > 0.0, "renyi positivity");
            c.require(renyi(alpha, lambda) >= floor, "renyi >= -log mu");
            c.require(gen_renyi1(alpha, lambda) > 0.0, "gen_renyi1 positivity");
            c.require(gen_renyi1(alpha, lambda) >= floor, "gen_renyi1 >= -log mu");
            c.require(tsallis(alpha, lambda) > 0.0, "tsallis positivity");
            for (double beta : kOrderGrid) {
                if (std::fabs(alpha - beta) > kOrderSeparation) {
                    c.require(gen_renyi2(alpha, beta, lambda) > 0.0, "gen_renyi2 positivity");
                    c.require(gen_renyi2(alpha, beta, lambda) >= floor, "gen_renyi2 >= -log mu");
                }
                c.require(sharma_mittal(alpha, beta, lambda) > 0.0, "sharma_mittal positivity");
            }
        }
    }
}

void criterion_monotone(Checker& c) {
    struct Combo {
        EntropyKind kind;
        double alpha, beta;
        const char* label;
    };
    const Combo combos[] = {
        {EntropyKind::Shannon, 1.0, 1.0, "shannon"},
        {EntropyKind::Renyi, 0.5, 1.0, "renyi(0.5)"},
        {EntropyKind::Renyi, 2.0, 1.0, "renyi(2)"},
        {EntropyKind::Renyi, 5.0, 1.0, "renyi(5)"},
        {EntropyKind::Tsallis, 0.5, 1.0, "tsallis(0.5)"},
        {EntropyKind::Tsallis, 2.0, 1.0, "tsallis(2)"},
        {EntropyKind::Tsallis, 5.0, 1.0, "tsallis(5)"},
        {EntropyKind::SharmaMittal, 0.5, 2.0, "sm(0.5,2)"},
        {EntropyKind::SharmaMittal, 2.0, 0.5, "sm(2,0.5)"},
        {EntropyKind::SharmaMittal, 2.0, 3.0, "sm(2,3)"},
        {EntropyKind::SharmaMittal, 0.5, 0.9, "sm(0.5,0.9)"},
        {EntropyKind::SharmaMittal, 3.0, 3.0, "sm(3,3)"},
    };
    for (const Combo& combo : combos) {
        const ScanReport r =
            scan_monotonicity(combo.kind, {1.0, combo.alpha, combo.beta}, 0.05, 200.0, 0.05);
        c.require(r.decreasing_intervals.empty(),
                  std::string(combo.label) + " reported a decreasing interval");
    }
}

void criterion_anomaly(Checker& c) {
    // (a) one dip for alpha = 0.1
    const ScanReport a = scan_monotonicity(EntropyKind::GenRenyi1, {1.0, 0.1}, 0.1, 20.0, 0.01);
    int minima = 0;
    for (const Extremum& e : a.extrema)
        if (e.kind == ExtremumKind::Minimum) ++minima;
    c.require(minima == 1, "alpha=0.1: expected exactly one local minimum, got " +
                               std::to_string(minima));
    c.require(a.decreasing_intervals.size() == 1,
              "alpha=0.1: expected exactly one decreasing interval");

    // (b) large-alpha windows
    const ScanReport b25 =
        scan_monotonicity(EntropyKind::GenRenyi1, {1.0, 25.0}, 1.0, 2.5, 0.001);
    bool in_window = !b25.decreasing_intervals.empty();
    for (const auto& iv : b25.decreasing_intervals) {
        if (!(iv.first >= 1.0 && iv.second <= 1.15)) in_window = false;
        c.require(!intersects(iv, 2.0, 2.5), "alpha=25: decrease intruded into [2,2.5]");
    }
    c.require(in_window, "alpha=25: expected the decrease inside [1,1.15]");

    const ScanReport b50 =
        scan_monotonicity(EntropyKind::GenRenyi1, {1.0, 50.0}, 1.0, 3.3, 0.001);
    bool hit1 = false;
    bool hit2 = false;
    for (const auto& iv : b50.decreasing_intervals) {
        if (intersects(iv, 1.0, 1.15)) hit1 = true;
        if (intersects(iv, 2.0, 2.15)) hit2 = true;
        c.require(!intersects(iv, 3.05, 3.25), "alpha=50: decrease intruded into [3.05,3.25]");
    }
    c.require(hit1, "alpha=50: no decrease in [1,1.15]");
    c.require(hit2, "alpha=50: no decrease in [2,2.15]");

    const ScanReport b100 =
        scan_monotonicity(EntropyKind::GenRenyi1, {1.0, 100.0}, 1.0, 3.2, 0.001);
    bool near1 = false;
    bool near2 = false;
    bool near3 = false;
    for (const auto& iv : b100.decreasing_intervals) {
        if (intersects(iv, 1.0, 1.15)) near1 = true;
        if (intersects(iv, 2.0, 2.15)) near2 = true;
        if (intersects(iv, 3.0, 3.15)) near3 = true;
    }
    c.require(near1 && near2 && near3, "alpha=100: expected decreases near 1, 2 and 3");

    // (c) two-parameter anomaly
    const ScanReport g2 = gen_renyi2_anomaly_probe(0.02, 0.01, 0.05, 150.0, 0.05);
    int g2_minima = 0;
    for (const Extremum& e : g2.extrema)
        if (e.kind == ExtremumKind::Minimum) ++g2_minima;
    c.require(g2.decreasing_intervals.size() >= 1, "(0.02,0.01): expected a decreasing stretch");
    c.require(g2_minima == 1, "(0.02,0.01): expected one local minimum");
    c.require(g2.derivatives.back() > 0.0, "(0.02,0.01): expected increase at the right edge");

    // (d) the sign change of rho'
    const double root = locate_rho_prime_root(0.05, 0.5, 1e-4);
    c.require(std::fabs(root - 0.15) <= 0.05,
              "alpha0 = " + std::to_string(root) + " not within 0.15 +/- 0.05");
}

void criterion_bounds(Checker& c) {
    c.require(std::fabs(gamma_star() - 0.811) < 5e-4, "gamma_star != 0.811 (3 decimals)");
    const double gamma = std::max(gamma_star(), 0.95);
    for (int j = 1; j <= 40; ++j) {
        const double lambda = std::exp(std::log(100.0) * j / 40.0);
        const double L = lower_bound_log_family(lambda);

        const double h_sh = shannon(lambda);
        c.require(L < h_sh && h_sh < upper_bound_shannon(lambda), "shannon sandwich");

        for (double alpha : {0.3, 0.5, 2.0, 5.0}) {
            const double h_r = renyi(alpha, lambda);
            c.require(L < h_r, "renyi lower sandwich");
            c.require(h_r < upper_bound_renyi(alpha, lambda, gamma), "renyi upper sandwich");
        }

        c.require(L < gen_renyi1(0.3, lambda), "gen_renyi1 lower sandwich");
        c.require(L < gen_renyi1(2.0, lambda), "gen_renyi1 lower sandwich");
        c.require(L < gen_renyi2(0.5, 2.0, lambda), "gen_renyi2 lower sandwich");

        for (double alpha : {0.5, 2.0}) {
            const BoundSet b = tsallis_bounds(alpha, lambda);
            const double h_t = tsallis(alpha, lambda);
            c.require(b.lower < h_t, "tsallis lower sandwich");
            if (alpha > 1.0) {
                c.require(b.upper && *b.upper == 1.0 / (alpha - 1.0), "tsallis ceiling value");
                c.require(h_t < *b.upper, "tsallis ceiling sandwich");
            }
        }

        for (double beta : {0.5, 3.0}) {
            const BoundSet b = sharma_mittal_bounds(2.0, beta, lambda);
            const double h_sm = sharma_mittal(2.0, beta, lambda);
            c.require(b.lower < h_sm, "sharma_mittal lower sandwich");
            if (beta > 1.0) {
                c.require(b.upper && *b.upper == 1.0 / (beta - 1.0), "sharma_mittal ceiling");
                c.require(h_sm < *b.upper, "sharma_mittal ceiling sandwich");
            }
        }
    }
}

void criterion_asymptotics(Checker& c) {
    const double lambda = 400.0;
    c.require(std::fabs(shannon_asymptote(lambda) / shannon(lambda) - 1.0) < 0.02,
              "shannon asymptote at 400");
    for (double alpha : {0.3, 0.5, 2.0, 4.0}) {
        c.require(std::fabs(renyi_asymptote(alpha, lambda) / renyi(alpha, lambda) - 1.0) < 0.02,
                  "renyi asymptote at 400, alpha " + std::to_string(alpha));
        c.require(
            std::fabs(tsallis_asymptote(alpha, lambda) / tsallis(alpha, lambda) - 1.0) < 0.02,
            "tsallis asymptote at 400, alpha " + std::to_string(alpha));
    }
    for (auto [alpha, beta] : {std::pair{0.3, 0.5}, {0.5, 2.0}, {2.0, 4.0}, {4.0, 0.3}})
        c.require(std::fabs(gen_renyi2_asymptote(alpha, beta, lambda) /
                                gen_renyi2(alpha, beta, lambda) -
                            1.0) < 0.02,
                  "gen_renyi2 asymptote at 400");
    for (auto [alpha, beta] : {std::pair{0.3, 0.5}, {0.5, 0.3}, {2.0, 4.0}, {4.0, 2.0}})
        c.require(std::fabs(sm_asymptote(alpha, beta, lambda) /
                                sharma_mittal(alpha, beta, lambda) -
                            1.0) < 0.02,
                  "sharma_mittal asymptote at 400");

    // super-unit orders: the asymptote functions return the constant limits
    c.require(std::fabs(tsallis_asymptote(2.0, 100.0) - 1.0) < 1e-3,
              "tsallis asymptote limit at alpha 2");
    for (double alpha : {0.5, 3.0})
        c.require(std::fabs(sm_asymptote(alpha, 2.0, 100.0) - 1.0) < 1e-3,
                  "sharma_mittal asymptote limit at beta 2");
    // and the entropies sit under those limits within the proven power gap
    const double t_gap = 1.0 - tsallis_bounds(2.0, 100.0).lower;
    c.require(std::fabs(tsallis(2.0, 100.0) - 1.0) < t_gap, "tsallis gap to limit at 100");
    const double sm_gap = 1.0 - sharma_mittal_bounds(3.0, 2.0, 100.0).lower;
    c.require(std::fabs(sharma_mittal(3.0, 2.0, 100.0) - 1.0) < sm_gap,
              "sharma_mittal gap to limit at 100");

    for (double alpha : {0.3, 0.5, 2.0, 4.0}) {
        const double exact = psi({200.0, alpha}, {}).value;
        c.require(std::fabs(psi_asymptote(alpha, 200.0) / exact - 1.0) < 0.01,
                  "psi saddle-point ratio at 200, alpha " + std::to_string(alpha));
    }
}

void criterion_derivatives(Checker& c) {
    const SeriesConfig cfg{};
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> alpha_dist(0.15, 3.0);
    std::uniform_real_distribution<double> lambda_dist(0.4, 25.0);

    int checked = 0;
    while (checked < 20) {
        const double alpha = alpha_dist(rng);
        const double lambda = lambda_dist(rng);
        if (std::fabs(alpha - 1.0) < 0.05) continue;
        ++checked;

        const double hl = 1e-6 * lambda;
        const double fd_l =
            (psi({lambda + hl, alpha}, cfg).value - psi({lambda - hl, alpha}, cfg).value) /
            (2.0 * hl);
        c.require(golden::rel_err(dpsi_dlambda({lambda, alpha}, cfg).value, fd_l) < 1e-5,
                  "dpsi_dlambda fd mismatch");

        const double ha = 1e-6 * alpha;
        const double fd_a =
            (psi({lambda, alpha + ha}, cfg).value - psi({lambda, alpha - ha}, cfg).value) /
            (2.0 * ha);
        c.require(golden::rel_err(dpsi_dalpha({lambda, alpha}, cfg).value, fd_a) < 1e-5,
                  "dpsi_dalpha fd mismatch");

        auto dlog_dlambda = [&](double a) {
            return psi_moments({lambda, a}, cfg).dlogpsi_dlambda();
        };
        const double hm = 1e-5;
        const double fd_m = (dlog_dlambda(alpha + hm) - dlog_dlambda(alpha - hm)) / (2.0 * hm);
        c.require(golden::rel_err(d2_logpsi_dalpha_dlambda({lambda, alpha}, cfg), fd_m) < 1e-5,
                  "mixed derivative fd mismatch");
    }

    std::uniform_real_distribution<double> rho_alpha(0.05, 2.0);
    int rho_checked = 0;
    while (rho_checked < 20) {
        const double alpha = rho_alpha(rng);
        if (std::fabs(alpha - 0.146) < 0.03) continue;  // rho' crosses zero there
        ++rho_checked;
        const double h = 1e-6;
        const double fd = (rho(alpha + h, cfg) - rho(alpha - h, cfg)) / (2.0 * h);
        c.require(golden::rel_err(rho_prime(alpha, cfg), fd) < 1e-5, "rho_prime fd mismatch");
    }
}

void criterion_cli(Checker& c) {
    const std::string table_args =
        "table --kind tsallis --alpha-range 0.2:3:0.3 --lambda-range 0.5:20:0.5";
    const std::string run1 = cli_capture(table_args);
    const std::string run2 = cli_capture(table_args);
    c.require(!run1.empty(), "table produced no output");
    c.require(run1 == run2, "table runs are not byte-identical");

    c.require(cli_exit_code("eval --kind nonsense --lambda 1") == 2, "unknown kind must exit 2");
    c.require(cli_exit_code("eval --kind renyi --alpha 1.0 --lambda 2") == 2,
              "degenerate order must exit 2");
    c.require(cli_exit_code("table --kind shannon --lambda-range 5:1:0.1") == 2,
              "empty grid must exit 2");
    c.require(cli_exit_code("bounds --kind shannon --lambda-range 0.5:10:0.5") == 2,
              "bounds below lambda=1 must exit 2");
    c.require(cli_exit_code("eval --kind renyi --alpha 0.5 --lambda 50000 --max-terms 1000") == 3,
              "truncation must exit 3");
    c.require(cli_exit_code("eval --kind shannon --lambda 1 --out /nonexistent_dir_zz/x.csv") == 4,
              "unwritable output must exit 4");
}

}  // namespace

int main() {
    run_criterion(1, "oracle equivalence", 10.0, criterion_oracle);
    run_criterion(2, "positivity", 5.0, criterion_positivity);
    run_criterion(3, "monotone (normal) behavior", 30.0, criterion_monotone);
    run_criterion(4, "anomalous behavior", 60.0, criterion_anomaly);
    run_criterion(5, "bounds", 20.0, criterion_bounds);
    run_criterion(6, "asymptotics", 10.0, criterion_asymptotics);
    run_criterion(7, "derivative consistency", 10.0, criterion_derivatives);
    run_criterion(8, "cli determinism and contract", 5.0, criterion_cli);

    if (g_criteria_failed != 0) {
        std::printf("%d criterion(s) failed\n", g_criteria_failed);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
