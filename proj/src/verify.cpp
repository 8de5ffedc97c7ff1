#include "hegf/verify.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <complex>
#include <cstring>
#include <future>
#include <limits>
#include <random>
#include <string>
#include <tuple>

#include "golden_values.hpp"
#include "hegf/bivariate.hpp"
#include "hegf/cdf_link.hpp"
#include "hegf/contour.hpp"
#include "hegf/errors.hpp"
#include "hegf/genfun.hpp"
#include "hegf/hermite.hpp"
#include "hegf/special_fn.hpp"

namespace hegf {

namespace {

using Inputs = std::vector<std::pair<std::string, double>>;
using Rows = std::vector<IdentityReport>;

constexpr double kSqrtPi = 1.7724538509055160273;

// Keeps the largest residual seen and the inputs that produced it.
class Worst {
 public:
  void add(double residual, Inputs inputs) {
    ++count_;
    const bool first_nan = std::isnan(residual) && !std::isnan(residual_);
    if (count_ == 1 || first_nan || residual > residual_) {
      residual_ = residual;
      inputs_ = std::move(inputs);
    }
  }

  IdentityReport report(std::string id, double tolerance, std::string notes) const {
    Inputs in = inputs_;
    in.emplace_back("samples", static_cast<double>(count_));
    return IdentityReport::make(std::move(id), std::move(in), residual_, tolerance, std::move(notes));
  }

 private:
  double residual_ = 0.0;
  Inputs inputs_;
  std::size_t count_ = 0;
};

double rel(double value, double reference) {
  const double d = std::abs(value - reference);
  return d == 0.0 ? 0.0 : d / std::max(std::abs(reference), DBL_MIN);
}

std::mt19937_64 suite_rng(std::uint64_t seed, Suite s) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(s)};
  return std::mt19937_64(seq);
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// -------------------------------------------------------------------------
// special functions

Rows special_suite(std::mt19937_64& rng) {
  Rows rows;

  Worst gamma;
  for (int i = 0; i <= 6000; ++i) {
    const double x = i / 1000.0;
    gamma.add(std::abs(kSqrtPi * erfc(x) - gamma_half_upper(x * x)), {{"x", x}});
  }
  rows.push_back(gamma.report("erfc_gamma_identity", 1e-14, "|sqrt(pi) erfc(x) - Gamma(1/2, x^2)|, x in [0, 6]"));

  Worst reflect;
  for (int i = 0; i <= 4000; ++i) {
    const double x = -10.0 + i / 200.0;
    reflect.add(std::abs(erfc(x) + erfc(-x) - 2.0), {{"x", x}});
  }
  for (int i = 0; i < 1000; ++i) {
    const double x = uniform(rng, -30.0, 30.0);
    reflect.add(std::abs(erfc(x) + erfc(-x) - 2.0), {{"x", x}});
  }
  rows.push_back(reflect.report("erfc_reflection", 1e-14, "|erfc(x) + erfc(-x) - 2|"));

  Worst scaled;
  for (int i = 0; i <= 1536; ++i) {
    const double x = i / 256.0;
    scaled.add(rel(erfcx(x) * std::exp(-x * x), erfc(x)), {{"x", x}});
  }
  rows.push_back(scaled.report("erfcx_unscaled", 1e-13, "erfcx(x) exp(-x^2) vs erfc(x), x in [0, 6]"));

  Worst golden_real;
  for (const auto& p : golden::kErfcx) golden_real.add(rel(erfcx(p.x), p.value), {{"x", p.x}});
  rows.push_back(golden_real.report("erfcx_golden", 1e-13, "relative error vs 50-digit table"));

  Worst golden_erfc;
  for (const auto& p : golden::kErfc) golden_erfc.add(rel(erfc(p.x), p.value), {{"x", p.x}});
  rows.push_back(golden_erfc.report("erfc_golden", 1e-13, "relative error vs 50-digit table"));

  Worst golden_complex;
  for (const auto& p : golden::kErfcxComplex) {
    const std::complex<double> ref(p.value_re, p.value_im);
    const auto v = erfcx_complex({p.re, p.im});
    golden_complex.add(std::abs(v - ref) / std::abs(ref), {{"re", p.re}, {"im", p.im}});
  }
  rows.push_back(golden_complex.report("erfcx_complex_golden", 1e-10, "relative error vs 50-digit table"));

  Worst conj;
  for (int i = 0; i < 1000; ++i) {
    const std::complex<double> w(uniform(rng, -4.0, 12.0), uniform(rng, -12.0, 12.0));
    const auto a = erfcx_complex(w);
    const auto b = erfcx_complex(std::conj(w));
    conj.add(std::abs(b - std::conj(a)) / std::abs(a), {{"re", w.real()}, {"im", w.imag()}});
  }
  rows.push_back(conj.report("erfcx_conjugate", 1e-14, "erfcx(conj w) vs conj(erfcx(w))"));

  // x erfcx(x) on a log grid over [1e-3, 1e6]: nondecreasing and below 1/sqrt(pi).
  Worst mono;
  double prev = 0.0;
  for (int i = 0; i <= 4500; ++i) {
    const double x = std::pow(10.0, -3.0 + i / 500.0);
    const double v = x * erfcx(x);
    const bool bad = v < prev || v > 1.0 / kSqrtPi;
    mono.add(bad ? 1.0 : 0.0, {{"x", x}});
    prev = v;
  }
  rows.push_back(mono.report("erfcx_monotone", 0.0, "1 when x erfcx(x) decreases or exceeds 1/sqrt(pi)"));
  return rows;
}

// -------------------------------------------------------------------------
// Hermite polynomials

Rows hermite_suite(std::mt19937_64& rng) {
  Rows rows;
  std::vector<double> xs(500);
  for (double& x : xs) x = uniform(rng, -10.0, 10.0);

  Worst recur, deriv, ode, parity;
  for (double x : xs) {
    const auto h = he_sequence(52, x);
    const auto hm = he_sequence(52, -x);
    for (unsigned n = 1; n <= 50; ++n) {
      const double a = n * h[n - 1];
      const double b = h[n + 1];
      const double c = x * h[n];
      const double scale = std::max({std::abs(a), std::abs(b), std::abs(c), DBL_MIN});
      recur.add(std::abs(a + b - c) / scale, {{"n", n}, {"x", x}});

      const double d1 = he_derivative(n, x);
      deriv.add(std::abs(d1 - a) / scale, {{"n", n}, {"x", x}});

      // He_n'' = n He_{n-1}', so He_n'' - x He_n' + n He_n = 0.
      const double d2 = n * he_derivative(n - 1, x);
      const double ode_scale = std::max({std::abs(n * x * h[n - 1]), std::abs(n * h[n]), std::abs(x * x * h[n]),
                                         std::abs(x * h[n + 1]), DBL_MIN});
      ode.add(std::abs(d2 - x * d1 + n * h[n]) / ode_scale, {{"n", n}, {"x", x}});

      const double sign = n % 2 == 0 ? 1.0 : -1.0;
      parity.add(std::abs(hm[n] - sign * h[n]) / std::max(1.0, std::abs(h[n])), {{"n", n}, {"x", x}});
    }
  }
  rows.push_back(recur.report("he_recurrence", 1e-12, "|n He_{n-1} + He_{n+1} - x He_n| / max term, n <= 50"));
  rows.push_back(deriv.report("he_derivative", 1e-12, "He_n' (x He_n - He_{n+1}) vs n He_{n-1}, scaled"));
  rows.push_back(ode.report("he_ode", 1e-11, "He_n'' - x He_n' + n He_n, scaled"));
  rows.push_back(parity.report("he_parity", 1e-13, "He_n(-x) vs (-1)^n He_n(x)"));

  Worst horner;
  for (unsigned n = 0; n <= 30; ++n) {
    const auto c = he_coefficients(n);
    for (std::size_t i = 0; i < 40; ++i) {
      const double x = xs[(n * 40 + i) % xs.size()];
      double scale = 0.0;
      for (std::size_t k = 0; k < c.coeffs.size(); ++k)
        scale += std::abs(static_cast<double>(c.coeffs[k])) * std::pow(std::abs(x), static_cast<double>(k));
      horner.add(std::abs(c.evaluate(x) - he_eval(n, x)) / std::max(scale, DBL_MIN), {{"n", n}, {"x", x}});
    }
  }
  rows.push_back(horner.report("he_coefficients", 1e-13, "Horner on exact coefficients vs recurrence, n <= 30"));
  return rows;
}

// -------------------------------------------------------------------------
// generating function

GenFunPoint random_positive_point(std::mt19937_64& rng, double x_lo, double x_hi, double t_lo, double t_hi) {
  for (;;) {
    const double x = uniform(rng, x_lo, x_hi);
    const double mag = uniform(rng, t_lo, t_hi);
    const double t = uniform(rng, 0.0, 1.0) < 0.5 ? -mag : mag;
    const GenFunPoint p(x, t);
    if (p.positive_branch()) return p;
  }
}

Rows genfun_suite(std::mt19937_64& rng) {
  Rows rows;

  Worst equiv, pde;
  for (int i = 0; i < 1000; ++i) {
    const auto p = random_positive_point(rng, -5.0, 5.0, 1e-3, 3.0);
    equiv.add(rel(g_closed_gamma_form(p), g_closed(p)), {{"x", p.x()}, {"t", p.t()}});
    const auto q = random_positive_point(rng, -5.0, 5.0, 1e-3, 3.0);
    pde.add(pde_residual(q).scaled(), {{"x", q.x()}, {"t", q.t()}});
  }
  rows.push_back(equiv.report("closed_form_equivalence", 1e-13, "scaled incomplete gamma path vs erfcx path"));
  rows.push_back(pde.report("pde_residual", 1e-11, "t^2 g_t - g_x + t g, scaled; t of both signs"));

  Worst charac;
  for (int i = 0; i < 200; ++i) {
    const auto p1 = random_positive_point(rng, -3.0, 3.0, 0.05, 1.0);
    const double sign = p1.t() > 0.0 ? 1.0 : -1.0;
    const double u = p1.u();
    for (;;) {
      const double t2 = sign * uniform(rng, 0.05, 1.0);
      const GenFunPoint p2(u + 1.0 / t2, t2);
      if (!p2.positive_branch()) continue;
      const double ref = characteristic_invariant_g(p1);
      charac.add(characteristic_check_g(p1, p2) / std::abs(ref),
                 {{"x1", p1.x()}, {"t1", p1.t()}, {"x2", p2.x()}, {"t2", p2.t()}});
      break;
    }
  }
  rows.push_back(charac.report("characteristic_g", 1e-12, "t g constant along x - 1/t, 200 pairs"));

  Worst classic_pde, classic_inv;
  for (int i = 0; i < 1000; ++i) {
    const double x = uniform(rng, -5.0, 5.0);
    const double t = uniform(rng, -5.0, 5.0);
    const auto c = classic_checks(x, t);
    classic_pde.add(c.pde_scale > 0.0 ? std::abs(c.pde_residual) / c.pde_scale : std::abs(c.pde_residual),
                    {{"x", x}, {"t", t}});
  }
  for (int i = 0; i < 200; ++i) {
    const double x1 = uniform(rng, -2.0, 2.0);
    const double t1 = uniform(rng, -2.0, 2.0);
    const double psi = x1 - t1;
    const double x2 = uniform(rng, -2.0, 2.0);
    const double t2 = x2 - psi;
    const auto a = classic_checks(x1, t1);
    const auto b = classic_checks(x2, t2);
    classic_inv.add(rel(b.invariant, a.invariant), {{"x1", x1}, {"t1", t1}, {"x2", x2}, {"t2", t2}});
  }
  rows.push_back(classic_pde.report("classic_pde", 1e-14, "G_x + G_t - x G for exp(x t - t^2/2), scaled"));
  rows.push_back(classic_inv.report("classic_characteristic", 1e-13, "exp(-x^2/2) G constant along x - t"));

  Worst grad;
  constexpr double h = 1e-5;
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      const double x = -1.0 + 2.0 * i / 9.0;
      const double mag = 0.1 + 0.5 * (j / 2) / 4.0;
      const double t = j % 2 == 0 ? mag : -mag;
      const GenFunPoint p(x, t);
      const auto an = g_gradient(p);
      const double fd_t = (g_closed({x, t + h}) - g_closed({x, t - h})) / (2.0 * h);
      const double fd_x = (g_closed({x + h, t}) - g_closed({x - h, t})) / (2.0 * h);
      grad.add(std::max(rel(fd_t, an.dt), rel(fd_x, an.dx)), {{"x", x}, {"t", t}});
    }
  }
  rows.push_back(grad.report("gradient_fd", 1e-6, "analytic gradient vs central differences, step 1e-5"));

  Worst order;
  const double t_small[] = {1e-4};
  for (double x : {0.0, 0.5, 2.0}) {
    for (unsigned N = 0; N <= 10; ++N) {
      const auto r = asymptotic_order_check(x, N, t_small);
      order.add(r.front().rel_dev, {{"x", x}, {"N", N}, {"order", r.front().order}, {"t", 1e-4}});
    }
  }
  rows.push_back(order.report("asymptotic_order", 1e-2,
                              "(g - S_N)/t^(N+1) vs He_{N+1}(x) at t = 1e-4; next order where He_{N+1}(x) = 0"));

  Worst trunc;
  for (int i = 0; i < 12; ++i) {
    const double x = uniform(rng, -2.0, 2.0);
    const double mag = uniform(rng, 0.04, 0.05);
    const double t = i % 2 == 0 ? mag : -mag;
    const auto N = static_cast<unsigned>(1.5 / (t * t)) + 10;
    const auto c = truncation_check(x, t, N);
    trunc.add(c.ratio, {{"x", x}, {"t", t}, {"n_star", static_cast<double>(c.n_star)}, {"min_term", c.min_term}});
  }
  rows.push_back(trunc.report("optimal_truncation", 2.0, "|g - S_{n_star}| / min_term, 200-digit evaluation"));

  Worst unit;
  for (double t : {1e-2, 1e-3, 1e-4}) unit.add(std::abs(g_closed({1.0, t}) - 1.0) / t, {{"x", 1.0}, {"t", t}});
  rows.push_back(unit.report("limit_unit", 2.0, "|g(1, t) - 1| / t"));

  const double t1200 = 1.0 / (1.0 + std::sqrt(2400.0));
  const double g1200 = g_closed({1.0, t1200});
  rows.push_back(IdentityReport::make("limit_z1200", {{"x", 1.0}, {"t", t1200}, {"g", g1200}},
                                      std::abs(g1200 - 1.0200), 1e-3,
                                      "g(1, t) at z = 1200 vs 1.0200; the stated value 0.994 is not reproduced"));
  return rows;
}

// -------------------------------------------------------------------------
// normal CDF link

Rows cdf_suite() {
  Rows rows;
  const auto a = cdf_asymptotic(0.0, 10.0, 40);
  rows.push_back(IdentityReport::make("cdf_series_mu10", {{"x", 0.0}, {"mu", 10.0}, {"N", 40}}, a.rel_error, 1e-12,
                                      "phi(mu - x) sum He_n(x)/mu^(n+1) vs erfc-based Phi"));
  const auto b = cdf_asymptotic(1.0, 8.0, 30);
  rows.push_back(IdentityReport::make("cdf_series_mu8", {{"x", 1.0}, {"mu", 8.0}, {"N", 30}}, b.rel_error, 1e-9,
                                      "phi(mu - x) sum He_n(x)/mu^(n+1) vs erfc-based Phi"));
  rows.push_back(IdentityReport::make("cdf_squared", {{"x", 0.0}, {"mu", 10.0}, {"N", 40}},
                                      squared_identity_residual(0.0, 10.0, 40), 1e-10,
                                      "double sum over n + m <= N vs squared Mills ratio"));

  Worst cauchy;
  for (const auto& [x, mu, N] : {std::tuple{0.0, 10.0, 40u}, {0.5, 8.0, 20u}, {1.0, 12.0, 30u}, {-1.0, 6.0, 12u}}) {
    const auto terms = cdf_series_terms(x, mu, N);
    const auto c = truncated_square(terms);
    double lhs = 0.0;
    for (double v : c) lhs += v;
    double s = 0.0;
    for (double v : terms) s += v;
    double cross = 0.0;
    for (std::size_t n = 0; n <= N; ++n)
      for (std::size_t m = 0; m <= N; ++m)
        if (n + m > N) cross += terms[n] * terms[m];
    cauchy.add(std::abs(lhs - (s * s - cross)), {{"x", x}, {"mu", mu}, {"N", N}});
  }
  rows.push_back(cauchy.report("cdf_cauchy_product", 1e-15, "truncated square vs full square minus high cross terms"));

  Worst mono;
  for (double x : {0.0, 0.5, 1.0}) {
    double prev = std::numeric_limits<double>::infinity();
    for (double mu : {6.0, 8.0, 10.0, 12.0}) {
      const double e = cdf_asymptotic(x, mu, 10).rel_error;
      mono.add(e < prev ? 0.0 : 1.0, {{"x", x}, {"mu", mu}, {"N", 10}});
      prev = e;
    }
  }
  rows.push_back(mono.report("cdf_monotone_mu", 0.0, "1 when the N = 10 error fails to shrink as mu grows"));

  Worst turn;
  for (double x : {0.0, 0.5, 1.0}) {
    const auto terms = cdf_series_terms(x, 3.0, 40);
    double smallest = std::numeric_limits<double>::infinity();
    std::size_t at = 0;
    for (std::size_t n = 0; n + 1 < terms.size(); ++n) {
      const double e = std::max(std::abs(terms[n]), std::abs(terms[n + 1]));
      if (e < smallest) {
        smallest = e;
        at = n;
      }
    }
    const double tail = std::max(std::abs(terms[39]), std::abs(terms[40]));
    const double tail20 = std::max(std::abs(terms[19]), std::abs(terms[20]));
    const bool grows = at < 38 && tail > smallest && tail > tail20;
    turn.add(grows ? 0.0 : 1.0, {{"x", x}, {"mu", 3.0}, {"n_min", static_cast<double>(at)}, {"term_40", tail}});
  }
  rows.push_back(turn.report("cdf_turnaround", 0.0, "1 when |term_N| fails to grow again by N = 40 at mu = 3"));
  return rows;
}

// -------------------------------------------------------------------------
// bivariate family

// (|a| + |c|)^k (|b| + |d|)^l bounds the sum of the absolute mixing weights
// over every (n, m) with n + m = k + l, so this dominates the sum of absolute
// contributions to he2_coeff: the natural rounding scale.
double he2_scale(const MixMatrix& m, unsigned n, unsigned mm, double x, double y) {
  const unsigned total = n + mm;
  const auto hx = he_sequence(total, x);
  const auto hy = he_sequence(total, y);
  double bound = 0.0;
  for (unsigned k = 0; k <= total; ++k) {
    const unsigned l = total - k;
    bound += std::abs(hx[k]) * std::abs(hy[l]) * std::pow(std::abs(m.a) + std::abs(m.c), k) *
             std::pow(std::abs(m.b) + std::abs(m.d), l);
  }
  return std::max(bound, DBL_MIN);
}

MixMatrix random_matrix(std::mt19937_64& rng) {
  return {uniform(rng, -1.5, 1.5), uniform(rng, -1.5, 1.5), uniform(rng, -1.5, 1.5), uniform(rng, -1.5, 1.5)};
}

Rows bivariate_suite(std::mt19937_64& rng) {
  Rows rows;

  Worst ident;
  for (int i = 0; i < 20; ++i) {
    const double x = uniform(rng, -3.0, 3.0);
    const double y = uniform(rng, -3.0, 3.0);
    for (unsigned n = 0; n <= 12; ++n)
      for (unsigned m = 0; n + m <= 12; ++m)
        ident.add(rel(he2_coeff(MixMatrix::identity(), n, m, x, y), he_eval(n, x) * he_eval(m, y)),
                  {{"n", n}, {"m", m}, {"x", x}, {"y", y}});
  }
  rows.push_back(ident.report("bivar_identity", 1e-12, "M = I coefficient vs He_n(x) He_m(y)"));

  Worst oracle, swap, homog;
  for (int i = 0; i < 50; ++i) {
    const auto M = random_matrix(rng);
    const double x = uniform(rng, -2.0, 2.0);
    const double y = uniform(rng, -2.0, 2.0);
    const double lambda = uniform(rng, 0.5, 2.0);
    const auto grid = series_product_oracle(M, x, y, 8);
    for (unsigned n = 0; n <= 8; ++n) {
      for (unsigned m = 0; n + m <= 8; ++m) {
        const double c = he2_coeff(M, n, m, x, y);
        const double scale = he2_scale(M, n, m, x, y);
        const Inputs in{{"a", M.a}, {"b", M.b}, {"c", M.c}, {"d", M.d}, {"n", n}, {"m", m}, {"x", x}, {"y", y}};
        oracle.add(std::abs(c - grid.at(n, m)) / scale, in);
        swap.add(std::abs(c - he2_coeff(M.swapped(), m, n, y, x)) / scale, in);
        const double ls = std::pow(lambda, n + m);
        homog.add(std::abs(he2_coeff(M.scaled(lambda), n, m, x, y) - ls * c) / (ls * scale), in);
      }
    }
  }
  const std::string scaled_note = ", relative to the sum of absolute contributions";
  rows.push_back(oracle.report("bivar_oracle", 1e-10, "binomial formula vs truncated series product" + scaled_note));
  rows.push_back(swap.report("bivar_swap", 1e-12, "He_{n,m}(M; x, y) vs He_{m,n}(M'; y, x)" + scaled_note));
  rows.push_back(homog.report("bivar_homogeneity", 1e-12, "M -> lambda M scales by lambda^(n+m)" + scaled_note));

  Worst closed;
  const MixMatrix perm{0.0, 1.0, 1.0, 0.0};
  for (int i = 0; i < 200; ++i) {
    const double x = uniform(rng, -2.0, 2.0);
    const double y = uniform(rng, -2.0, 2.0);
    const double t = uniform(rng, 0.05, 0.4);
    const double s = uniform(rng, 0.05, 0.4);
    const double ref = g2_closed(x, y, s, t, MixMatrix::identity());
    const double r1 = rel(g2_closed(x, y, t, s, perm), ref);
    const double r2 = rel(g2_closed(y, x, t, s, MixMatrix::identity()), g2_closed(x, y, s, t, MixMatrix::identity()));
    closed.add(std::max(r1, r2), {{"x", x}, {"y", y}, {"t", t}, {"s", s}});
  }
  rows.push_back(closed.report("bivar_closed_swap", 1e-15,
                               "g2(x, y, t, s; P) = g2(x, y, s, t; I) and g2(x, y, s, t; I) = g2(y, x, t, s; I)"));
  return rows;
}

// -------------------------------------------------------------------------
// contour integrals

double factorial(unsigned k) {
  double f = 1.0;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return f;
}

Rows contour_suite() {
  Rows rows;
  const ContourSpec unit{1.0, 64, SqrtBranch::sqrt2_times_t};

  Worst taylor;
  for (unsigned k = 0; k <= 8; ++k) {
    const auto power = [k](std::complex<double> t) { return std::pow(t, -static_cast<int>(k + 1)); };
    const auto e = circle_quadrature([&](std::complex<double> t) { return std::exp(t) * power(t); }, unit);
    taylor.add(std::abs(e - 1.0 / factorial(k)), {{"f", 0}, {"k", k}});
    const double cos_ref = k % 2 == 0 ? ((k / 2) % 2 == 0 ? 1.0 : -1.0) / factorial(k) : 0.0;
    const auto c = circle_quadrature([&](std::complex<double> t) { return std::cos(t) * power(t); }, unit);
    taylor.add(std::abs(c - cos_ref), {{"f", 1}, {"k", k}});
    const double poly_ref = k <= 3 ? static_cast<double>(k + 1) : 0.0;
    const auto p = circle_quadrature(
        [&](std::complex<double> t) { return (1.0 + t * (2.0 + t * (3.0 + 4.0 * t))) * power(t); }, unit);
    taylor.add(std::abs(p - poly_ref), {{"f", 2}, {"k", k}});
  }
  rows.push_back(taylor.report("quadrature_taylor", 1e-13,
                               "Taylor coefficients of exp (f=0), cos (f=1), 1+2t+3t^2+4t^3 (f=2); 64 nodes"));

  Worst re, im, radius;
  for (double x : {-2.0, -0.5, 0.0, 1.5, 3.0}) {
    for (unsigned n = 0; n <= 12; ++n) {
      const double ref = he_eval(n, x);
      const double scale = std::max(1.0, std::abs(ref));
      const auto v1 = classic_contour_he(n, x, {1.0, 4096, SqrtBranch::sqrt2_times_t});
      re.add(std::abs(v1.real() - ref) / scale, {{"n", n}, {"x", x}, {"r", 1.0}});
      im.add(std::abs(v1.imag()) / scale, {{"n", n}, {"x", x}, {"r", 1.0}});
      for (double r : {0.5, 2.0}) {
        const auto v = classic_contour_he(n, x, {r, 4096, SqrtBranch::sqrt2_times_t});
        radius.add(std::abs(v.real() - v1.real()) / scale, {{"n", n}, {"x", x}, {"r", r}});
      }
    }
  }
  rows.push_back(re.report("classic_contour_re", 1e-9, "Re of the contour integral vs He_n(x), 4096 nodes"));
  rows.push_back(im.report("classic_contour_im", 1e-9, "|Im| of the contour integral relative to max(1, |He_n|)"));
  rows.push_back(radius.report("classic_contour_radius", 1e-9, "r = 0.5 and r = 2 vs r = 1"));

  // The scaled-gamma contour is a measurement: the row asserts only that the
  // grid completes and that two runs agree bit for bit.
  const double xs[] = {0.0, 0.5, 1.0};
  const auto first = new_contour_grid(xs, 1024);
  const auto second = new_contour_grid(xs, 1024);
  std::size_t mismatches = 0;
  std::size_t overflowed = 0;
  const auto same = [](double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; };
  for (std::size_t i = 0; i < first.size(); ++i) {
    const auto& a = first[i];
    const auto& b = second[i];
    const bool eq = same(a.value.real(), b.value.real()) && same(a.value.imag(), b.value.imag()) &&
                    same(a.finite_value.real(), b.finite_value.real()) &&
                    same(a.finite_value.imag(), b.finite_value.imag()) && same(a.signed_error, b.signed_error) &&
                    same(a.max_abs_integrand, b.max_abs_integrand) && a.overflow_nodes == b.overflow_nodes;
    if (!eq) ++mismatches;
    if (a.overflow_nodes > 0) ++overflowed;
  }
  rows.push_back(IdentityReport::make(
      "new_contour_determinism",
      {{"rows", static_cast<double>(first.size())}, {"rows_with_overflow", static_cast<double>(overflowed)}},
      static_cast<double>(mismatches), 0.0, "rows differing between two runs of the measurement grid"));
  return rows;
}

Rows run_one(Suite s, std::uint64_t seed) {
  auto rng = suite_rng(seed, s);
  switch (s) {
    case Suite::special:
      return special_suite(rng);
    case Suite::hermite:
      return hermite_suite(rng);
    case Suite::genfun:
      return genfun_suite(rng);
    case Suite::cdf:
      return cdf_suite();
    case Suite::bivariate:
      return bivariate_suite(rng);
    case Suite::contour:
      return contour_suite();
    case Suite::all:
      break;
  }
  return {};
}

}  // namespace

Suite parse_suite(std::string_view s) {
  for (auto v : {Suite::special, Suite::hermite, Suite::genfun, Suite::cdf, Suite::bivariate, Suite::contour,
                 Suite::all})
    if (s == to_string(v)) return v;
  throw usage_error("unknown suite '" + std::string(s) + "'");
}

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::special:
      return "special";
    case Suite::hermite:
      return "hermite";
    case Suite::genfun:
      return "genfun";
    case Suite::cdf:
      return "cdf";
    case Suite::bivariate:
      return "bivariate";
    case Suite::contour:
      return "contour";
    case Suite::all:
      return "all";
  }
  return "unknown";
}

std::vector<IdentityReport> run_verify(const VerifyOptions& options) {
  std::vector<Suite> suites;
  if (options.suite == Suite::all)
    suites = {Suite::special, Suite::hermite, Suite::genfun, Suite::cdf, Suite::bivariate, Suite::contour};
  else
    suites = {options.suite};

  std::vector<std::future<Rows>> jobs;
  for (auto s : suites) jobs.push_back(std::async(std::launch::async, run_one, s, options.seed));

  Rows rows;
  for (auto& j : jobs) {
    auto part = j.get();
    rows.insert(rows.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  if (options.tolerance) {
    for (auto& r : rows) {
      r.tolerance = *options.tolerance;
      r.passed = r.residual <= r.tolerance;
    }
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const IdentityReport& a, const IdentityReport& b) { return a.identity_id < b.identity_id; });
  return rows;
}

bool all_passed(const std::vector<IdentityReport>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const IdentityReport& r) { return r.passed; });
}

}  // namespace hegf
