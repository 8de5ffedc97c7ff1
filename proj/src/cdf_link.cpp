#include "hegf/cdf_link.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hegf/errors.hpp"
#include "hegf/special_fn.hpp"

namespace hegf {

namespace {

constexpr double kInvSqrt2Pi = 0.39894228040143267794;

void require_args(double x, double mu, const char* fn) {
  if (!std::isfinite(x) || !std::isfinite(mu)) throw domain_error(std::string(fn) + ": non-finite argument");
  if (mu == 0.0) throw domain_error(std::string(fn) + ": mu must be nonzero");
}

}  // namespace

std::vector<double> cdf_series_terms(double x, double mu, unsigned N) {
  require_args(x, mu, "cdf_series_terms");
  const double inv = 1.0 / mu;
  std::vector<double> a(N + 1);
  a[0] = inv;
  if (N >= 1) a[1] = x * inv * inv;
  for (unsigned n = 1; n < N; ++n) a[n + 1] = (x * a[n] - n * inv * a[n - 1]) * inv;
  return a;
}

double mills_ratio_reference(double x, double mu) {
  return std::sqrt(std::numbers::pi / 2.0) * erfcx((mu - x) / std::numbers::sqrt2);
}

CdfSeriesResult cdf_asymptotic(double x, double mu, unsigned N) {
  const auto a = cdf_series_terms(x, mu, N);
  CdfSeriesResult r;
  r.mu = mu;
  r.x = x;
  r.n_terms = N;
  for (double v : a) r.raw_sum += v;
  const double y = mu - x;
  r.value = kInvSqrt2Pi * std::exp(-0.5 * y * y) * r.raw_sum;
  r.reference = normal_cdf(x, {mu, 1.0});
  r.rel_error = r.reference > 0.0 ? std::abs(r.value - r.reference) / r.reference : std::abs(r.value);
  return r;
}

std::vector<double> truncated_square(const std::vector<double>& a) {
  std::vector<double> c(a.size(), 0.0);
  for (std::size_t k = 0; k < a.size(); ++k)
    for (std::size_t n = 0; n <= k; ++n) c[k] += a[n] * a[k - n];
  return c;
}

double squared_identity_residual(double x, double mu, unsigned N) {
  const auto c = truncated_square(cdf_series_terms(x, mu, N));
  double lhs = 0.0;
  for (double v : c) lhs += v;
  const double m = mills_ratio_reference(x, mu);
  const double rhs = m * m;
  return std::abs(lhs - rhs) / rhs;
}

}  // namespace hegf
