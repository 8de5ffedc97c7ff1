#pragma once

#include <vector>

namespace hegf {

// Normal-CDF consequences of g(x, 1/mu) for mu > 0.
//
// With t = 1/mu the generating function becomes the Mills ratio of mu - x:
//
//   sum_n He_n(x) / mu^{n+1} = sqrt(2 pi) exp((mu - x)^2 / 2) Phi(x; mu, 1)
//                            = sqrt(pi/2) erfcx((mu - x) / sqrt(2)),
//
// an asymptotic (never convergent) expansion in 1/mu. The Gaussian factor
// exp((mu - x)^2 / 2) is essential: without it the two sides differ by
// ~1e21 already at mu = 10. Phi is recovered as
//
//   Phi(x; mu, 1) ~ phi(mu - x) sum_{n <= N} He_n(x) / mu^{n+1},
//   phi(y) = exp(-y^2/2) / sqrt(2 pi).
//
// The literal sum of terms diverges (E[He_n] = mu^n gives sum 1/mu = inf);
// that statement has no finite content and is not evaluated here.

struct CdfSeriesResult {
  double mu = 0.0;
  double x = 0.0;
  unsigned n_terms = 0;
  double raw_sum = 0.0;    // sum_{n <= N} He_n(x) / mu^{n+1}
  double value = 0.0;      // phi(mu - x) * raw_sum, the series estimate of Phi
  double reference = 0.0;  // erfc-based Phi(x; mu, 1)
  double rel_error = 0.0;  // |value - reference| / reference
};

// Throws domain_error for mu == 0 or non-finite arguments.
CdfSeriesResult cdf_asymptotic(double x, double mu, unsigned N);

// He_n(x) / mu^{n+1}, n = 0..N, by the scaled recurrence.
std::vector<double> cdf_series_terms(double x, double mu, unsigned N);

// Squared identity, truncated at total degree n + m <= N:
//   sum_{n+m<=N} He_n He_m / mu^{n+m+2} vs 2 pi exp((mu-x)^2) Phi^2.
// Returns the relative residual against the right-hand side.
double squared_identity_residual(double x, double mu, unsigned N);

// Cauchy product of the truncated single series: c_k = sum_{n+m=k} a_n a_m,
// k = 0..N.
std::vector<double> truncated_square(const std::vector<double>& a);

// sqrt(pi/2) erfcx((mu - x) / sqrt(2)), the right-hand side of the
// single-sum identity in overflow-safe form.
double mills_ratio_reference(double x, double mu);

}  // namespace hegf
