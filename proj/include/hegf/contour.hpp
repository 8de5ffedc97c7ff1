#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace hegf {

// How sqrt(2 t^2) is continued off the positive real t axis.
enum class SqrtBranch {
  sqrt2_times_t,        // sqrt(2) t, the continuation of the t > 0 derivation
  abs_like_principal,   // principal square root of 2 t^2, i.e. sqrt(2) t sign(Re t)
};

std::string_view to_string(SqrtBranch b);
SqrtBranch parse_sqrt_branch(std::string_view s);  // throws usage_error

// Circle |t| = radius sampled at `nodes` equispaced points.
struct ContourSpec {
  double radius = 1.0;
  std::size_t nodes = 1024;
  SqrtBranch branch = SqrtBranch::sqrt2_times_t;

  // Throws domain_error unless radius > 0 and nodes >= 16 and even.
  void validate() const;
  std::complex<double> node(std::size_t j) const;
};

using ContourIntegrand = std::function<std::complex<double>(std::complex<double>)>;

// (1/(2 pi i)) \oint f(t) dt by the trapezoidal rule, (1/nodes) sum_j f(t_j) t_j,
// summed in node order. Throws node_overflow_error naming the first node at
// which f overflows (throws overflow_error or returns a non-finite value).
std::complex<double> circle_quadrature(const ContourIntegrand& f, const ContourSpec& spec);

// He_n(x) = (n!/(2 pi i)) \oint exp(x t - t^2/2) / t^{n+1} dt. The real part
// approximates He_n(x); the imaginary part is quadrature noise. Same rule as
// circle_quadrature, evaluated in long double. n <= 170.
std::complex<double> classic_contour_he(unsigned n, double x, const ContourSpec& spec);

struct NewContourDiagnostics {
  unsigned n = 0;
  double x = 0.0;
  double radius = 0.0;
  std::size_t nodes = 0;
  SqrtBranch branch = SqrtBranch::sqrt2_times_t;

  std::complex<double> value;          // NaN when any node overflowed
  std::complex<double> finite_value;   // sum over the finite nodes only
  double reference = 0.0;              // he_eval(n, x)
  double signed_error = 0.0;           // Re(value) - reference
  double max_abs_integrand = 0.0;      // over finite nodes
  double min_abs_integrand = 0.0;      // over finite nodes
  std::size_t overflow_nodes = 0;
  std::size_t first_overflow_node = 0;  // meaningful when overflow_nodes > 0
  double max_overflow_exponent = 0.0;   // largest Re(w^2) that overflowed

};

// He_n(x) ~ (1/(2 sqrt(2) pi i)) \oint exp(z) Gamma(1/2, z) / t^{n+2} dt with
// exp(z) Gamma(1/2, z) = sqrt(pi) erfcx((1 - x t) / sqrt(2 t^2)). The integrand
// has an essential singularity at t = 0 and grows like exp(Re w^2) where
// Re w < 0, so nothing guarantees convergence. This is a measurement: node
// overflow is recorded, never thrown, and no accuracy is promised.
NewContourDiagnostics new_contour_he(unsigned n, double x, const ContourSpec& spec);

// Experiment grid: every x, n = 0..4, r in {0.02, 0.05, 0.1}, both branches,
// in that nesting order.
std::vector<NewContourDiagnostics> new_contour_grid(std::span<const double> xs, std::size_t nodes);

}  // namespace hegf
