#pragma once

// Leading-order large-lambda approximants for psi and every entropy. All of
// them are total closed forms for lambda > 0; callers decide applicability.

namespace pentropy {

// psi(alpha, lambda) ~ (1/sqrt(alpha)) (2 pi lambda)^((1-alpha)/2)
double psi_asymptote(double alpha, double lambda);
double log_psi_asymptote(double alpha, double lambda);

// H_SH ~ (1/2) log(2 pi lambda) + 1/2
double shannon_asymptote(double lambda);

// H_R ~ (1/2) log(2 pi lambda) + log(alpha) / (2 (alpha - 1))
double renyi_asymptote(double alpha, double lambda);

// H_GR(alpha, beta) ~ (1/2) log(2 pi lambda) + (log beta - log alpha) / (2 (beta - alpha))
double gen_renyi2_asymptote(double alpha, double beta, double lambda);

// For alpha in (0,1): the Tsallis closed form with psi replaced by its
// leading asymptote, growing like (2 pi lambda)^((1-alpha)/2); the constant
// limit 1/(alpha-1) for alpha > 1.
double tsallis_asymptote(double alpha, double lambda);

// Same construction with beta driving the growth; the constant limit
// 1/(beta-1) for beta > 1.
double sm_asymptote(double alpha, double beta, double lambda);

}  // namespace pentropy
