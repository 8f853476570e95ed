// Command-line front end: single evaluations, grid tables, bound sandwiches,
// asymptote comparisons and anomaly scans, emitting CSV or JSON for external
// plotting.
//
// Exit codes: 0 success, 2 domain/usage error, 3 truncation failure,
// 4 I/O error, 5 internal bound violation.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pentropy/analysis.hpp"
#include "pentropy/asymptotics.hpp"
#include "pentropy/bounds.hpp"
#include "pentropy/entropies.hpp"
#include "pentropy/grid.hpp"

namespace {

using nlohmann::json;
using namespace pentropy;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 2;
constexpr int kExitTruncation = 3;
constexpr int kExitIo = 4;
constexpr int kExitBoundViolation = 5;

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OutputSpec {
    std::string format = "csv";
    std::string path = "-";
    int precision = 12;
};

struct Range {
    double lo = 0.0;
    double hi = 0.0;
    double step = 0.0;
};

std::string fmt_g(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    return buf;
}

Range parse_range(const std::string& text) {
    Range r;
    if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &r.lo, &r.hi, &r.step) != 3)
        throw std::domain_error("range must have the form LO:HI:STEP");
    if (!(r.step > 0.0)) throw std::domain_error("range step must be positive");
    return r;
}

std::vector<double> range_points(const Range& r) {
    std::vector<double> xs;
    const long n = static_cast<long>(std::floor((r.hi - r.lo) / r.step + 0.5)) + 1;
    for (long k = 0; k < n; ++k) {
        const double x = r.lo + static_cast<double>(k) * r.step;
        if (x <= r.hi + r.step * 0.5) xs.push_back(x);
    }
    return xs;
}

void write_output(const OutputSpec& out, const std::string& payload) {
    if (out.path == "-" || out.path.empty()) {
        std::cout << payload;
        if (!std::cout) throw io_error("failed to write to standard output");
        return;
    }
    std::ofstream f(out.path, std::ios::binary);
    if (!f) throw io_error("cannot open output file: " + out.path);
    f << payload;
    f.flush();
    if (!f) throw io_error("failed to write output file: " + out.path);
}

EntropyKind parse_kind(const std::string& name) {
    const auto kind = kind_from_name(name);
    if (!kind)
        throw std::domain_error(
            "unknown kind '" + name +
            "' (expected shannon, renyi, gen_renyi1, gen_renyi2, tsallis or sharma_mittal)");
    return *kind;
}

void validate_output(const OutputSpec& out) {
    if (out.format != "csv" && out.format != "json")
        throw std::domain_error("format must be csv or json");
    if (out.precision < 4 || out.precision > 17)
        throw std::domain_error("precision must lie in [4, 17]");
}

// Fills alpha/beta columns only for kinds that use them.
json query_header(EntropyKind kind, const std::optional<double>& alpha,
                  const std::optional<double>& beta) {
    json j;
    j["schema"] = 1;
    j["kind"] = kind_name(kind);
    j["alpha"] = nullptr;
    j["beta"] = nullptr;
    if (kind_uses_alpha(kind) && alpha) j["alpha"] = *alpha;
    if (kind_uses_beta(kind) && beta) j["beta"] = *beta;
    return j;
}

struct CommonArgs {
    std::string kind_name;
    std::optional<double> alpha;
    std::optional<double> beta;
    std::optional<double> lambda;
    std::optional<std::string> lambda_range;
    std::optional<std::string> alpha_range;
    std::optional<std::string> beta_range;
    std::optional<double> gamma;
    OutputSpec out;
    SeriesConfig cfg;
};

EntropyQuery build_query(EntropyKind kind, const CommonArgs& args, double lambda) {
    EntropyQuery q;
    q.kind = kind;
    q.cfg = args.cfg;
    q.params.lambda = lambda;
    if (kind_uses_alpha(kind)) {
        if (!args.alpha) throw std::domain_error("this kind requires --alpha");
        q.params.alpha = *args.alpha;
    }
    if (kind_uses_beta(kind)) {
        if (!args.beta) throw std::domain_error("this kind requires --beta");
        q.params.beta = *args.beta;
    }
    return q;
}

int cmd_eval(const CommonArgs& args) {
    validate_output(args.out);
    const EntropyKind kind = parse_kind(args.kind_name);
    if (!args.lambda) throw std::domain_error("eval requires --lambda");
    const EntropyQuery q = build_query(kind, args, *args.lambda);
    const EntropyResult r = evaluate(q);

    std::string payload;
    if (args.out.format == "json") {
        json j = query_header(kind, args.alpha, args.beta);
        j["lambda"] = *args.lambda;
        j["value"] = r.value;
        j["terms_used"] = r.terms_used;
        j["tail_bound"] = r.tail_bound;
        payload = j.dump(2) + "\n";
    } else {
        const int p = args.out.precision;
        payload = "kind,alpha,beta,lambda,value,terms_used,tail_bound\n";
        payload += std::string(kind_name(kind)) + ",";
        payload += (kind_uses_alpha(kind) ? fmt_g(*args.alpha, p) : "") + ",";
        payload += (kind_uses_beta(kind) ? fmt_g(*args.beta, p) : "") + ",";
        payload += fmt_g(*args.lambda, p) + "," + fmt_g(r.value, p) + "," +
                   std::to_string(r.terms_used) + "," + fmt_g(r.tail_bound, 3) + "\n";
    }
    write_output(args.out, payload);
    return kExitOk;
}

int cmd_table(const CommonArgs& args) {
    validate_output(args.out);
    const EntropyKind kind = parse_kind(args.kind_name);

    auto order_points = [](const std::optional<std::string>& range,
                           const std::optional<double>& single, bool used,
                           const char* flag) -> std::vector<std::optional<double>> {
        if (!used) return {std::nullopt};
        if (range) {
            std::vector<std::optional<double>> xs;
            for (double x : range_points(parse_range(*range))) xs.emplace_back(x);
            return xs;
        }
        if (single) return {*single};
        throw std::domain_error(std::string("this kind requires ") + flag);
    };

    const auto alphas = order_points(args.alpha_range, args.alpha, kind_uses_alpha(kind),
                                     "--alpha or --alpha-range");
    const auto betas =
        order_points(args.beta_range, args.beta, kind_uses_beta(kind), "--beta or --beta-range");
    if (!args.lambda_range && !args.lambda)
        throw std::domain_error("table requires --lambda or --lambda-range");
    const std::vector<double> lambdas = args.lambda_range
                                            ? range_points(parse_range(*args.lambda_range))
                                            : std::vector<double>{*args.lambda};

    if (alphas.empty() || betas.empty() || lambdas.empty())
        throw std::domain_error("table grid is empty");

    struct Cell {
        std::optional<double> alpha, beta;
        double lambda = 0.0;
    };
    std::vector<Cell> cells;
    cells.reserve(alphas.size() * betas.size() * lambdas.size());
    for (const auto& a : alphas)
        for (const auto& b : betas)
            for (double lambda : lambdas) cells.push_back({a, b, lambda});

    std::vector<double> values(cells.size());
    parallel_for_index(cells.size(), 0, [&](std::size_t i) {
        EntropyQuery q;
        q.kind = kind;
        q.cfg = args.cfg;
        q.params.lambda = cells[i].lambda;
        if (cells[i].alpha) q.params.alpha = *cells[i].alpha;
        if (cells[i].beta) q.params.beta = *cells[i].beta;
        values[i] = evaluate(q).value;
    });

    const int p = args.out.precision;
    std::string payload;
    if (args.out.format == "json") {
        json j = query_header(kind, std::nullopt, std::nullopt);
        json rows = json::array();
        for (std::size_t i = 0; i < cells.size(); ++i) {
            json row;
            row["alpha"] = cells[i].alpha ? json(*cells[i].alpha) : json(nullptr);
            row["beta"] = cells[i].beta ? json(*cells[i].beta) : json(nullptr);
            row["lambda"] = cells[i].lambda;
            row["value"] = values[i];
            rows.push_back(row);
        }
        j["rows"] = rows;
        payload = j.dump(2) + "\n";
    } else {
        payload = "alpha,beta,lambda,value\n";
        for (std::size_t i = 0; i < cells.size(); ++i) {
            payload += (cells[i].alpha ? fmt_g(*cells[i].alpha, p) : "") + ",";
            payload += (cells[i].beta ? fmt_g(*cells[i].beta, p) : "") + ",";
            payload += fmt_g(cells[i].lambda, p) + "," + fmt_g(values[i], p) + "\n";
        }
    }
    write_output(args.out, payload);
    return kExitOk;
}

int cmd_bounds(const CommonArgs& args) {
    validate_output(args.out);
    const EntropyKind kind = parse_kind(args.kind_name);
    if (!args.lambda_range) throw std::domain_error("bounds requires --lambda-range");
    const std::vector<double> lambdas = range_points(parse_range(*args.lambda_range));
    if (lambdas.empty()) throw std::domain_error("bounds grid is empty");
    for (double lambda : lambdas)
        if (!(lambda > 1.0))
            throw std::domain_error("bounds require every lambda to exceed 1");

    double gamma = 0.0;
    if (kind == EntropyKind::Renyi) {
        if (!args.alpha) throw std::domain_error("renyi bounds require --alpha");
        gamma = args.gamma ? *args.gamma : optimal_gamma(*args.alpha, lambdas.back(), args.cfg);
    }

    struct RowOut {
        double lower = 0.0, value = 0.0;
        std::optional<double> upper, asymptote;
    };
    std::vector<RowOut> rows(lambdas.size());
    parallel_for_index(lambdas.size(), 0, [&](std::size_t i) {
        const double lambda = lambdas[i];
        RowOut row;
        row.value = evaluate(build_query(kind, args, lambda)).value;
        switch (kind) {
            case EntropyKind::Shannon: {
                const BoundSet b = shannon_bounds(lambda);
                row.lower = b.lower;
                row.upper = b.upper;
                row.asymptote = shannon_asymptote(lambda);
                break;
            }
            case EntropyKind::Renyi: {
                const BoundSet b = renyi_bounds(*args.alpha, lambda, gamma, args.cfg);
                row.lower = b.lower;
                row.upper = b.upper;
                row.asymptote = renyi_asymptote(*args.alpha, lambda);
                break;
            }
            case EntropyKind::Tsallis: {
                const BoundSet b = tsallis_bounds(*args.alpha, lambda);
                row.lower = b.lower;
                row.upper = b.upper;
                row.asymptote = tsallis_asymptote(*args.alpha, lambda);
                break;
            }
            case EntropyKind::SharmaMittal: {
                const BoundSet b = sharma_mittal_bounds(*args.alpha, *args.beta, lambda);
                row.lower = b.lower;
                row.upper = b.upper;
                row.asymptote = sm_asymptote(*args.alpha, *args.beta, lambda);
                break;
            }
            case EntropyKind::GenRenyi1: {
                row.lower = lower_bound_log_family(lambda);
                break;
            }
            case EntropyKind::GenRenyi2: {
                row.lower = lower_bound_log_family(lambda);
                row.asymptote = gen_renyi2_asymptote(*args.alpha, *args.beta, lambda);
                break;
            }
        }
        rows[i] = row;
    });

    for (std::size_t i = 0; i < rows.size(); ++i) {
        const RowOut& row = rows[i];
        if (!(row.lower < row.value) || (row.upper && !(row.value < *row.upper)))
            throw std::logic_error("bound violation at lambda = " + fmt_g(lambdas[i], 17));
    }

    const int p = args.out.precision;
    std::string payload;
    if (args.out.format == "json") {
        json j = query_header(kind, args.alpha, args.beta);
        if (kind == EntropyKind::Renyi) j["gamma"] = gamma;
        json out_rows = json::array();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            json row;
            row["lambda"] = lambdas[i];
            row["lower"] = rows[i].lower;
            row["value"] = rows[i].value;
            row["upper"] = rows[i].upper ? json(*rows[i].upper) : json(nullptr);
            row["asymptote"] = rows[i].asymptote ? json(*rows[i].asymptote) : json(nullptr);
            out_rows.push_back(row);
        }
        j["rows"] = out_rows;
        payload = j.dump(2) + "\n";
    } else {
        payload = "lambda,lower,value,upper,asymptote\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            payload += fmt_g(lambdas[i], p) + "," + fmt_g(rows[i].lower, p) + "," +
                       fmt_g(rows[i].value, p) + ",";
            payload += (rows[i].upper ? fmt_g(*rows[i].upper, p) : "") + ",";
            payload += (rows[i].asymptote ? fmt_g(*rows[i].asymptote, p) : "") + "\n";
        }
    }
    write_output(args.out, payload);
    return kExitOk;
}

int cmd_scan(const CommonArgs& args) {
    validate_output(args.out);
    const EntropyKind kind = parse_kind(args.kind_name);
    if (!args.lambda_range) throw std::domain_error("scan requires --lambda-range");
    const Range r = parse_range(*args.lambda_range);

    PoissonParams orders;
    if (kind_uses_alpha(kind)) {
        if (!args.alpha) throw std::domain_error("this kind requires --alpha");
        orders.alpha = *args.alpha;
    }
    if (kind_uses_beta(kind)) {
        if (!args.beta) throw std::domain_error("this kind requires --beta");
        orders.beta = *args.beta;
    }
    const ScanReport report = scan_monotonicity(kind, orders, r.lo, r.hi, r.step, args.cfg);

    std::string payload;
    if (args.out.format == "json") {
        json j = query_header(kind, args.alpha, args.beta);
        j["grid"] = report.grid;
        j["values"] = report.values;
        j["derivatives"] = report.derivatives;
        json intervals = json::array();
        for (const auto& [lo, hi] : report.decreasing_intervals)
            intervals.push_back(json::array({lo, hi}));
        j["decreasing_intervals"] = intervals;
        json extrema = json::array();
        for (const Extremum& e : report.extrema) {
            json ex;
            ex["lambda"] = e.lambda;
            ex["kind"] = e.kind == ExtremumKind::Minimum ? "min" : "max";
            extrema.push_back(ex);
        }
        j["extrema"] = extrema;
        payload = j.dump(2) + "\n";
    } else {
        const int p = args.out.precision;
        payload = "lambda,value,derivative\n";
        for (std::size_t i = 0; i < report.grid.size(); ++i)
            payload += fmt_g(report.grid[i], p) + "," + fmt_g(report.values[i], p) + "," +
                       fmt_g(report.derivatives[i], p) + "\n";
    }
    write_output(args.out, payload);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Poisson entropy toolkit"};
    app.require_subcommand(1);

    CommonArgs args;
    double rel_tol = args.cfg.rel_tol;
    std::int64_t max_terms = args.cfg.max_terms;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--kind", args.kind_name, "entropy kind")->required();
        sub->add_option("--alpha", args.alpha, "order alpha");
        sub->add_option("--beta", args.beta, "second order beta");
        sub->add_option("--lambda", args.lambda, "Poisson intensity");
        sub->add_option("--lambda-range", args.lambda_range, "LO:HI:STEP");
        sub->add_option("--alpha-range", args.alpha_range, "LO:HI:STEP");
        sub->add_option("--beta-range", args.beta_range, "LO:HI:STEP");
        sub->add_option("--gamma", args.gamma, "Mittag-Leffler bound parameter");
        sub->add_option("--format", args.out.format, "csv or json");
        sub->add_option("--out", args.out.path, "output path ('-' = stdout)");
        sub->add_option("--precision", args.out.precision, "significant digits [4,17]");
        sub->add_option("--rel-tol", rel_tol, "series tail tolerance");
        sub->add_option("--max-terms", max_terms, "series term cap");
    };

    CLI::App* eval = app.add_subcommand("eval", "evaluate one entropy");
    CLI::App* table = app.add_subcommand("table", "entropy values over a parameter grid");
    CLI::App* bounds = app.add_subcommand("bounds", "bound sandwich and asymptote per lambda");
    CLI::App* scan = app.add_subcommand("scan", "monotonicity scan with extrema");
    for (CLI::App* sub : {eval, table, bounds, scan}) add_common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitDomain;
    }

    try {
        args.cfg.rel_tol = rel_tol;
        args.cfg.max_terms = max_terms;
        args.cfg.validate();
        if (eval->parsed()) return cmd_eval(args);
        if (table->parsed()) return cmd_table(args);
        if (bounds->parsed()) return cmd_bounds(args);
        return cmd_scan(args);
    } catch (const truncation_failure& e) {
        std::cerr << "truncation failure: " << e.what() << "\n";
        return kExitTruncation;
    } catch (const io_error& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::logic_error& e) {
        std::cerr << "internal bound violation: " << e.what() << "\n";
        return kExitBoundViolation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}
