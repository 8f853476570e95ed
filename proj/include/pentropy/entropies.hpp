#pragma once

// The six entropy functions of the Poisson distribution, expressed through
// the power sum psi and its derivatives, plus the direct Shannon series.

#include <cstdint>
#include <optional>
#include <string_view>

#include "pentropy/config.hpp"

namespace pentropy {

enum class EntropyKind { Shannon, Renyi, GenRenyi1, GenRenyi2, Tsallis, SharmaMittal };

struct EntropyQuery {
    EntropyKind kind = EntropyKind::Shannon;
    PoissonParams params;
    SeriesConfig cfg;
};

// Value plus the diagnostics of the series work behind it. tail_bound is the
// absolute truncation estimate of the underlying sums.
struct EntropyResult {
    double value = 0.0;
    std::int64_t terms_used = 0;
    double tail_bound = 0.0;
};

const char* kind_name(EntropyKind kind);
std::optional<EntropyKind> kind_from_name(std::string_view name);
bool kind_uses_alpha(EntropyKind kind);
bool kind_uses_beta(EntropyKind kind);

// Throws degenerate_order / std::domain_error when the query violates the
// admissibility rules of its kind.
void validate_query(const EntropyQuery& q);

EntropyResult evaluate(const EntropyQuery& q);

// H_SH(lambda) = -lambda log(lambda/e) + e^-lambda sum_{i>=2} lambda^i log(i!)/i!
double shannon(double lambda, const SeriesConfig& cfg = {});

// H_R(alpha, lambda) = log psi(alpha, lambda) / (1 - alpha), alpha != 1.
double renyi(double alpha, double lambda, const SeriesConfig& cfg = {});

// H_GR(alpha, lambda) = -d/dalpha log psi(alpha, lambda); continuous through
// alpha = 1 where it equals the Shannon entropy.
double gen_renyi1(double alpha, double lambda, const SeriesConfig& cfg = {});

// H_GR(alpha, beta, lambda) = log(psi(alpha)/psi(beta)) / (beta - alpha),
// symmetric in (alpha, beta).
double gen_renyi2(double alpha, double beta, double lambda, const SeriesConfig& cfg = {});

// H_T(alpha, lambda) = (psi(alpha, lambda) - 1) / (1 - alpha); below
// 1/(alpha-1) for alpha > 1.
double tsallis(double alpha, double lambda, const SeriesConfig& cfg = {});

// H_SM(alpha, beta, lambda) = (psi^((1-beta)/(1-alpha)) - 1) / (1 - beta);
// the exponent is applied to log psi before exponentiation.
double sharma_mittal(double alpha, double beta, double lambda, const SeriesConfig& cfg = {});

}  // namespace pentropy
