#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pentropy {

// Raised when a series fails to meet its tail tolerance within the term cap.
class truncation_failure : public std::runtime_error {
public:
    explicit truncation_failure(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an order parameter sits inside the guard band around a
// removable singularity (alpha ~ 1, beta ~ 1, or alpha ~ beta).
class degenerate_order : public std::domain_error {
public:
    explicit degenerate_order(const std::string& what) : std::domain_error(what) {}
};

class gamma_out_of_range : public std::domain_error {
public:
    explicit gamma_out_of_range(const std::string& what) : std::domain_error(what) {}
};

class empty_grid : public std::invalid_argument {
public:
    explicit empty_grid(const std::string& what) : std::invalid_argument(what) {}
};

// Minimal separation below which order parameters are treated as coincident.
inline constexpr double kOrderSeparation = 1e-12;

// Smallest intensity accepted; anything at or below is rejected as a domain
// error instead of returning the degenerate limit.
inline constexpr double kMinLambda = 1e-300;

// Truncation and stability policy shared by every infinite sum.
struct SeriesConfig {
    double rel_tol = 1e-14;            // relative tail tolerance, in (0, 1e-6)
    std::int64_t max_terms = 10'000'000;
    double log_domain_threshold = 30;  // switch to log-domain terms when alpha*lambda exceeds this

    void validate() const {
        if (!(rel_tol > 0.0) || !(rel_tol < 1e-6))
            throw std::invalid_argument("SeriesConfig: rel_tol must lie in (0, 1e-6)");
        if (max_terms < 1000)
            throw std::invalid_argument("SeriesConfig: max_terms must be >= 1000");
    }
};

struct PoissonParams {
    double lambda = 1.0;
    double alpha = 1.0;
    double beta = 1.0;
};

// Value of a summed series plus the diagnostics needed to judge it.
struct EvalResult {
    double value = 0.0;
    double log_value = 0.0;  // ln(value) when value > 0, NaN otherwise
    std::int64_t terms_used = 0;
    double tail_bound = 0.0;
    bool used_log_domain = false;
};

inline void require_lambda(double lambda) {
    if (!(lambda > kMinLambda))
        throw std::domain_error("lambda must be positive (and above 1e-300)");
}

inline void require_order(double value, const char* name) {
    if (!(value > 0.0))
        throw std::domain_error(std::string(name) + " must be positive");
}

}  // namespace pentropy
