#include "hegf/genfun.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <string>

#include "hegf/errors.hpp"
#include "hegf/genfun_highprec.hpp"
#include "hegf/hermite.hpp"
#include "hegf/special_fn.hpp"

namespace hegf {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

// Relative agreement required of two u coordinates on one characteristic.
constexpr double kUMatchTol = 1e-12;

void require_branch(const GenFunPoint& p, Branch branch, const char* fn) {
  if (branch == Branch::positive_only && !p.positive_branch())
    throw domain_error(std::string(fn) + ": 1 - x t <= 0 (use the extended branch)");
}

}  // namespace

GenFunPoint::GenFunPoint(double x, double t) : x_(x), t_(t), one_minus_xt_(std::fma(-x, t, 1.0)) {
  if (!std::isfinite(x) || !std::isfinite(t)) throw domain_error("GenFunPoint: non-finite coordinate");
  if (t == 0.0) throw domain_error("GenFunPoint: t must be nonzero");
}

double GenFunPoint::z() const noexcept {
  const double y = one_minus_xt_ / t_;
  return 0.5 * y * y;
}

double g_closed(const GenFunPoint& p, Branch branch) {
  require_branch(p, branch, "g_closed");
  const double scale = std::numbers::sqrt2 * std::abs(p.t());
  const double arg = p.one_minus_xt() / scale;
  const double e = erfcx(arg);
  const double g = kSqrtPi / scale * e;
  if (!std::isfinite(g)) throw overflow_error("g_closed: value exceeds the double range", arg * arg);
  return g;
}

double g_closed_gamma_form(const GenFunPoint& p) {
  require_branch(p, Branch::positive_only, "g_closed_gamma_form");
  const double t = p.t();
  return gamma_half_upper_scaled(p.z()) / std::sqrt(2.0 * t * t);
}

GenFunGradient g_gradient(const GenFunPoint& p, Branch branch) {
  const double g = g_closed(p, branch);
  const double t = p.t();
  const double w = p.one_minus_xt();
  const double t3 = t * t * t;
  return {-g / t - w * g / t3 + 1.0 / t3, -w * g / t + 1.0 / t};
}

PdeResidual pde_residual(const GenFunPoint& p, Branch branch) {
  const double g = g_closed(p, branch);
  const auto grad = g_gradient(p, branch);
  const double t = p.t();
  const double residual = t * t * grad.dt - grad.dx + t * g;
  const double scale = std::max({std::abs(t * g), std::abs(p.one_minus_xt() * g / t), 1.0 / std::abs(t)});
  return {residual, scale};
}

double TruncatedSeries1D::envelope(std::size_t n) const {
  if (n + 1 >= terms.size()) return std::abs(terms.at(n));
  return std::max(std::abs(terms[n]), std::abs(terms[n + 1]));
}

TruncatedSeries1D partial_sum(double x, double t, unsigned N) {
  if (!std::isfinite(x) || !std::isfinite(t)) throw domain_error("partial_sum: non-finite argument");
  TruncatedSeries1D s;
  s.terms.resize(N + 1);
  s.partial_sums.resize(N + 1);
  s.terms[0] = 1.0;
  if (N >= 1) s.terms[1] = x * t;
  for (unsigned n = 1; n < N; ++n) s.terms[n + 1] = t * (x * s.terms[n] - n * t * s.terms[n - 1]);

  double acc = 0.0;
  for (unsigned n = 0; n <= N; ++n) {
    acc += s.terms[n];
    s.partial_sums[n] = acc;
  }

  s.n_star = 0;
  s.min_term = s.envelope(0);
  for (std::size_t n = 1; n < N; ++n) {
    const double e = s.envelope(n);
    if (e < s.min_term) {
      s.min_term = e;
      s.n_star = n;
    }
  }
  return s;
}

std::vector<OrderRow> asymptotic_order_check(double x, unsigned N, std::span<const double> t_list) {
  using highprec::Real;
  unsigned order = N + 1;
  double target = he_eval(order, x);
  if (target == 0.0) target = he_eval(++order, x);
  std::vector<OrderRow> rows;
  rows.reserve(t_list.size());
  for (double t : t_list) {
    const GenFunPoint p(x, t);
    require_branch(p, Branch::positive_only, "asymptotic_order_check");
    const Real hx(x);
    const Real ht(t);
    const auto terms = highprec::series_terms(hx, ht, N);
    Real sum = 0;
    for (const auto& term : terms) sum += term;
    const Real ratio = (highprec::g_closed(hx, ht) - sum) / pow(ht, order);
    const double r = static_cast<double>(ratio);
    rows.push_back({t, order, r, target, std::abs(r - target) / std::abs(target)});
  }
  return rows;
}

TruncationCheck truncation_check(double x, double t, unsigned N) {
  using highprec::Real;
  const GenFunPoint p(x, t);
  require_branch(p, Branch::positive_only, "truncation_check");
  const Real hx(x);
  const Real ht(t);
  const auto terms = highprec::series_terms(hx, ht, N);

  std::size_t n_star = 0;
  Real min_term = N == 0 ? abs(terms[0]) : std::max<Real>(abs(terms[0]), abs(terms[1]));
  for (std::size_t n = 1; n < N; ++n) {
    const Real e = std::max<Real>(abs(terms[n]), abs(terms[n + 1]));
    if (e < min_term) {
      min_term = e;
      n_star = n;
    }
  }
  Real sum = 0;
  for (std::size_t n = 0; n <= n_star; ++n) sum += terms[n];
  const Real error = abs(highprec::g_closed(hx, ht) - sum);
  return {n_star, static_cast<double>(min_term), static_cast<double>(error),
          static_cast<double>(error / min_term)};
}

double characteristic_invariant_g(const GenFunPoint& p) { return p.t() * g_closed(p); }

double characteristic_check_g(const GenFunPoint& p1, const GenFunPoint& p2) {
  const double reach = std::max({1.0, std::abs(p1.x()), std::abs(1.0 / p1.t()), std::abs(p2.x()),
                                 std::abs(1.0 / p2.t())});
  if (std::abs(p1.u() - p2.u()) > kUMatchTol * reach)
    throw usage_error("characteristic_check_g: points lie on different characteristics");
  return std::abs(characteristic_invariant_g(p1) - characteristic_invariant_g(p2));
}

double classic_g(double x, double t) { return std::exp(x * t - 0.5 * t * t); }

ClassicCheck classic_checks(double x, double t) {
  ClassicCheck c{};
  c.g = classic_g(x, t);
  c.dg_dx = t * c.g;
  c.dg_dt = (x - t) * c.g;
  c.pde_residual = c.dg_dx + c.dg_dt - x * c.g;
  c.pde_scale = std::max({std::abs(c.dg_dx), std::abs(c.dg_dt), std::abs(x * c.g)});
  c.invariant = std::exp(-0.5 * x * x) * c.g;
  c.psi = x - t;
  return c;
}

}  // namespace hegf
