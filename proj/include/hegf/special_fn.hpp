#pragma once

#include <complex>

namespace hegf {

// Mean and standard deviation of a normal distribution. sigma must be > 0.
struct NormalParams {
  double mu = 0.0;
  double sigma = 1.0;
};

// Complementary error function. Throws domain_error for non-finite x.
// Underflows to 0 for x > ~27.2.
double erfc(double x);

// Scaled complementary error function exp(x^2) * erfc(x).
//
// Never overflows for x >= 0; behaves as 1/(sqrt(pi) x) for large x. For
// x < -26.6 the value 2 exp(x^2) exceeds the double range and +inf is
// returned. Throws domain_error for non-finite x.
double erfcx(double x);

// Upper incomplete gamma function Gamma(1/2, z) = sqrt(pi) erfc(sqrt(z)).
// Real branch only: throws domain_error for z < 0 or NaN.
double gamma_half_upper(double z);

// exp(z) * Gamma(1/2, z) = sqrt(pi) erfcx(sqrt(z)), finite for every z >= 0.
double gamma_half_upper_scaled(double z);

// Normal CDF Phi(x; mu, sigma) = erfc((mu - x) / (sqrt(2) sigma)) / 2.
// Throws domain_error unless sigma > 0 and all arguments are finite.
double normal_cdf(double x, const NormalParams& p);

// Analytic continuation of erfcx to the complex plane.
//
// Re(w) < 0 uses the reflection erfcx(w) = 2 exp(w^2) - erfcx(-w). When
// Re(w^2) is too large for exp() the function throws overflow_error whose
// exponent() is Re(w^2). Throws domain_error for non-finite w.
std::complex<double> erfcx_complex(std::complex<double> w);

namespace detail {

// Region boundaries of the kernels; see special_fn.cpp.
inline constexpr double kErfSmallLimit = 0.46875;
inline constexpr double kErfcxRationalLimit = 4.0;
inline constexpr double kComplexTaylorRadius = 1.0;
inline constexpr double kComplexFractionRadius = 7.0;

// Individual real kernels, exposed for the switch-over accuracy sweep.
double erfcx_rational(double x);           // Cody rational form, 0.46875 <= x <= 4
double erfcx_continued_fraction(double x);  // Laplace fraction, x > 0

// Individual complex kernels for Re(w) >= 0.
std::complex<double> erfcx_taylor(std::complex<double> w);
std::complex<double> erfcx_quadrature(std::complex<double> w);
std::complex<double> erfcx_continued_fraction(std::complex<double> w);

}  // namespace detail

}  // namespace hegf
