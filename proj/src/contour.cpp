#include "hegf/contour.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hegf/errors.hpp"
#include "hegf/genfun.hpp"
#include "hegf/hermite.hpp"
#include "hegf/special_fn.hpp"

namespace hegf {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

double factorial(unsigned n) {
  double f = 1.0;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

bool finite(std::complex<double> v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

// exp(2 pi i j / n), folded into the first octant where the period allows so
// that every node carries a rounding error of one ulp and no drift in j.
template <class Real>
std::complex<Real> root_of_unity(std::size_t j, std::size_t n) {
  j %= n;
  if (2 * j > n) return std::conj(root_of_unity<Real>(n - j, n));
  if (n % 4 == 0) {
    if (4 * j > n) {
      const auto w = root_of_unity<Real>(j - n / 4, n);
      return {-w.imag(), w.real()};
    }
    if (8 * j > n) {
      const auto w = root_of_unity<Real>(n / 4 - j, n);
      return {w.imag(), w.real()};
    }
  }
  const Real a = 2 * std::numbers::pi_v<Real> * static_cast<Real>(j) / static_cast<Real>(n);
  return {std::cos(a), std::sin(a)};
}

}  // namespace

std::string_view to_string(SqrtBranch b) {
  switch (b) {
    case SqrtBranch::sqrt2_times_t:
      return "sqrt2_times_t";
    case SqrtBranch::abs_like_principal:
      return "abs_like_principal";
  }
  return "unknown";
}

SqrtBranch parse_sqrt_branch(std::string_view s) {
  if (s == "sqrt2_times_t") return SqrtBranch::sqrt2_times_t;
  if (s == "abs_like_principal") return SqrtBranch::abs_like_principal;
  throw usage_error("unknown branch '" + std::string(s) + "'");
}

void ContourSpec::validate() const {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw domain_error("ContourSpec: radius must be positive");
  if (nodes < 16 || nodes % 2 != 0) throw domain_error("ContourSpec: nodes must be even and >= 16");
}

std::complex<double> ContourSpec::node(std::size_t j) const {
  return radius * root_of_unity<double>(j, nodes);
}

std::complex<double> circle_quadrature(const ContourIntegrand& f, const ContourSpec& spec) {
  spec.validate();
  std::complex<double> sum = 0.0;
  for (std::size_t j = 0; j < spec.nodes; ++j) {
    const auto t = spec.node(j);
    std::complex<double> v;
    try {
      v = f(t) * t;
    } catch (const overflow_error& e) {
      throw node_overflow_error("circle_quadrature: integrand overflows at node " + std::to_string(j),
                                e.exponent(), j);
    }
    if (!finite(v))
      throw node_overflow_error("circle_quadrature: non-finite integrand at node " + std::to_string(j),
                                std::numeric_limits<double>::infinity(), j);
    sum += v;
  }
  return sum / static_cast<double>(spec.nodes);
}

std::complex<double> classic_contour_he(unsigned n, double x, const ContourSpec& spec) {
  spec.validate();
  if (n > 170) throw capacity_error("classic_contour_he: n! overflows for n > 170");
  // Summands reach n! / r^n while the sum cancels down to He_n(x), so nodes,
  // integrand and accumulator are carried in long double.
  using Real = long double;
  using Complex = std::complex<Real>;
  const Real radius = spec.radius;
  const Real inv_rn = std::pow(radius, -static_cast<Real>(n));
  Complex sum = 0;
  for (std::size_t j = 0; j < spec.nodes; ++j) {
    const Complex t = radius * root_of_unity<Real>(j, spec.nodes);
    const Complex t_inv_n = inv_rn * std::conj(root_of_unity<Real>(n * j, spec.nodes));
    const Complex v = std::exp(static_cast<Real>(x) * t - t * t / Real(2)) * t_inv_n;
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw node_overflow_error("classic_contour_he: non-finite integrand at node " + std::to_string(j),
                                std::numeric_limits<double>::infinity(), j);
    sum += v;
  }
  const Complex r = static_cast<Real>(factorial(n)) * sum / static_cast<Real>(spec.nodes);
  return {static_cast<double>(r.real()), static_cast<double>(r.imag())};
}

NewContourDiagnostics new_contour_he(unsigned n, double x, const ContourSpec& spec) {
  spec.validate();
  NewContourDiagnostics d;
  d.n = n;
  d.x = x;
  d.radius = spec.radius;
  d.nodes = spec.nodes;
  d.branch = spec.branch;
  d.reference = he_eval(n, x);
  d.min_abs_integrand = std::numeric_limits<double>::infinity();

  std::complex<double> sum = 0.0;
  for (std::size_t j = 0; j < spec.nodes; ++j) {
    const auto t = spec.node(j);
    double sign = 1.0;
    if (spec.branch == SqrtBranch::abs_like_principal)
      sign = t.real() > 0.0 ? 1.0 : t.real() < 0.0 ? -1.0 : (t.imag() > 0.0 ? 1.0 : -1.0);
    const auto w = (1.0 - x * t) / (std::numbers::sqrt2 * sign * t);

    std::complex<double> integrand;
    bool overflowed = false;
    double exponent = 0.0;
    try {
      integrand = kSqrtPi * erfcx_complex(w) / (std::numbers::sqrt2 * std::pow(t, static_cast<int>(n + 2)));
      if (!finite(integrand)) {
        overflowed = true;
        exponent = std::real(w * w);
      }
    } catch (const overflow_error& e) {
      overflowed = true;
      exponent = e.exponent();
    }

    if (overflowed) {
      if (d.overflow_nodes == 0) {
        d.first_overflow_node = j;
        d.max_overflow_exponent = exponent;
      }
      d.max_overflow_exponent = std::max(d.max_overflow_exponent, exponent);
      ++d.overflow_nodes;
      continue;
    }
    const double mag = std::abs(integrand);
    d.max_abs_integrand = std::max(d.max_abs_integrand, mag);
    d.min_abs_integrand = std::min(d.min_abs_integrand, mag);
    sum += integrand * t;
  }

  const double nodes = static_cast<double>(spec.nodes);
  d.finite_value = sum / nodes;
  if (d.overflow_nodes == spec.nodes) d.min_abs_integrand = 0.0;
  if (d.overflow_nodes == 0) {
    d.value = d.finite_value;
    d.signed_error = d.value.real() - d.reference;
  } else {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    d.value = {nan, nan};
    d.signed_error = nan;
  }
  return d;
}

std::vector<NewContourDiagnostics> new_contour_grid(std::span<const double> xs, std::size_t nodes) {
  std::vector<NewContourDiagnostics> rows;
  for (double x : xs)
    for (unsigned n = 0; n <= 4; ++n)
      for (double r : {0.02, 0.05, 0.1})
        for (auto b : {SqrtBranch::sqrt2_times_t, SqrtBranch::abs_like_principal})
          rows.push_back(new_contour_he(n, x, {r, nodes, b}));
  return rows;
}

}  // namespace hegf
