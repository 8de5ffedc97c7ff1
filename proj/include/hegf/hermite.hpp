#pragma once

#include <string>
#include <vector>

namespace hegf {

// Probabilist Hermite polynomials He_n(x), the monic family orthogonal for
// the weight exp(-x^2/2).
//
// Floating-point evaluation runs the three-term recurrence
// He_{n+1} = x He_n - n He_{n-1} without normalization. |He_n(x)| grows
// roughly like sqrt(n!) * exp(x^2/4), so n <= 50 and |x| <= 10 stay far from
// overflow (|He_50(10)| ~ 1e42); much larger n needs scaled terms such as
// t^n He_n(x), which genfun and cdf_link compute directly.

double he_eval(unsigned n, double x);

// [He_0(x), ..., He_nmax(x)] in one recurrence pass.
std::vector<double> he_sequence(unsigned nmax, double x);

// d/dx He_n(x) = x He_n(x) - He_{n+1}(x).
double he_derivative(unsigned n, double x);

// Exact coefficients. 128-bit signed integers hold every coefficient of
// He_n for n <= kMaxExactDegree; the largest magnitude at n = 54 is ~1.2e38.
__extension__ typedef __int128 ExactInt;
inline constexpr unsigned kMaxExactDegree = 54;

struct HermiteCoeffs {
  unsigned degree = 0;
  std::vector<ExactInt> coeffs;  // coeffs[k] multiplies x^k; size degree + 1

  // Horner evaluation in long double.
  double evaluate(double x) const;
};

// Throws capacity_error for n > kMaxExactDegree.
HermiteCoeffs he_coefficients(unsigned n);

std::string to_string(ExactInt v);

}  // namespace hegf
