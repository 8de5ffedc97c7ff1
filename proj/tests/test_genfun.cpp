#include "hegf/genfun.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

#include "hegf/errors.hpp"
#include "hegf/hermite.hpp"
#include "hegf/special_fn.hpp"

using namespace hegf;

namespace {

double rel(double a, double b) { return a == b ? 0.0 : std::abs(a - b) / std::abs(b); }

const double kT1200 = 1.0 / (1.0 + std::sqrt(2400.0));

}  // namespace

TEST_CASE("evaluation point") {
  const GenFunPoint p(0.5, 0.2);
  CHECK(p.one_minus_xt() == doctest::Approx(0.9));
  CHECK(p.z() == doctest::Approx(0.5 * 4.5 * 4.5));
  CHECK(p.u() == doctest::Approx(-4.5));
  CHECK(p.series_domain());
  CHECK(p.positive_branch());
  CHECK_FALSE(GenFunPoint(2.0, 1.0).positive_branch());
  CHECK_THROWS_AS(GenFunPoint(1.0, 0.0), hegf::domain_error);
  CHECK_THROWS_AS(GenFunPoint(NAN, 0.1), hegf::domain_error);
}

TEST_CASE("closed form values") {
  CHECK(rel(g_closed({0.0, 0.1}), 0.9902859647173192129) <= 1e-15);
  // 1 - t^2 + 3 t^4 - 15 t^6 + 105 t^8 at t = 0.1.
  CHECK(std::abs(g_closed({0.0, 0.1}) - 0.99028605) <= 1.1e-6);

  const GenFunPoint p(1.0, kT1200);
  CHECK(p.z() == doctest::Approx(1200.0).epsilon(1e-12));
  const double g = g_closed(p);
  CHECK(std::abs(g - 1.0) < 0.05);
  CHECK(rel(g, 1.019987773044606718) <= 1e-14);
  CHECK(std::abs(g - 1.0200) <= 1e-3);
}

TEST_CASE("limit g(1, t) -> 1") {
  double prev = INFINITY;
  for (double t : {1e-2, 1e-3, 1e-4}) {
    const double d = std::abs(g_closed({1.0, t}) - 1.0);
    CHECK(d <= 2.0 * t);
    CHECK(d < prev / 5.0);
    prev = d;
  }
}

TEST_CASE("branches") {
  const GenFunPoint off(2.0, 1.0);
  CHECK_THROWS_AS(g_closed(off), hegf::domain_error);
  CHECK_THROWS_AS(g_closed_gamma_form(off), hegf::domain_error);
  const double g = g_closed(off, Branch::extended);
  const double w = (1.0 - 2.0) / std::sqrt(2.0);
  CHECK(rel(g, std::sqrt(M_PI / 2.0) * erfcx(w)) <= 1e-15);
  CHECK_THROWS_AS(g_closed({40.0, 1.0}, Branch::extended), hegf::overflow_error);
}

TEST_CASE("gamma form equals erfcx form") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> xs(-5.0, 5.0), ts(-3.0, 3.0);
  int n = 0;
  while (n < 1000) {
    const double x = xs(rng), t = ts(rng);
    if (std::abs(t) < 1e-3) continue;
    const GenFunPoint p(x, t);
    if (!p.positive_branch()) continue;
    CHECK(rel(g_closed_gamma_form(p), g_closed(p)) <= 1e-13);
    ++n;
  }
}

TEST_CASE("gradient") {
  const double g = g_closed({0.0, 0.1});
  CHECK(rel(g_gradient({0.0, 0.1}).dx, 10.0 * (1.0 - g)) <= 1e-12);
  CHECK(g_gradient({0.0, 0.1}).dx == doctest::Approx(0.09715).epsilon(1e-4));

  const double h = 1e-5;
  for (const auto [x, t] : {std::pair{0.3, 0.05}, {0.3, -0.05}, {-1.0, 0.4}, {0.8, -0.6}}) {
    const auto d = g_gradient({x, t});
    const double fx = (g_closed({x + h, t}) - g_closed({x - h, t})) / (2 * h);
    const double ft = (g_closed({x, t + h}) - g_closed({x, t - h})) / (2 * h);
    CAPTURE(x);
    CAPTURE(t);
    CHECK(rel(fx, d.dx) <= 1e-6);
    CHECK(rel(ft, d.dt) <= 1e-6);
  }
}

TEST_CASE("PDE residual") {
  CHECK(pde_residual({0.0, 0.1}).scaled() <= 1e-12);
  CHECK(pde_residual({2.0, -0.2}).scaled() <= 1e-12);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> xs(-5.0, 5.0), ts(-3.0, 3.0);
  int n = 0;
  while (n < 1000) {
    const double x = xs(rng), t = ts(rng);
    if (std::abs(t) < 1e-3 || !GenFunPoint(x, t).positive_branch()) continue;
    CHECK(pde_residual({x, t}).scaled() <= 1e-11);
    ++n;
  }
}

TEST_CASE("partial sums") {
  const auto s = partial_sum(0.0, 0.1, 8);
  CHECK(s.partial_sums[8] == doctest::Approx(0.99028605).epsilon(1e-12));
  CHECK(s.terms[2] == doctest::Approx(-0.01));
  CHECK(s.terms[1] == 0.0);
  CHECK(partial_sum(3.0, 0.7, 0).partial_sums[0] == 1.0);
  CHECK(partial_sum(3.0, 0.7, 0).n_star == 0);

  // Terms match t^n He_n(x) directly.
  const auto q = partial_sum(1.3, -0.2, 20);
  for (unsigned n = 0; n <= 20; ++n)
    CHECK(q.terms[n] == doctest::Approx(std::pow(-0.2, n) * he_eval(n, 1.3)).epsilon(1e-13));

  // Large N stays finite thanks to the scaled recurrence.
  const auto big = partial_sum(0.5, 0.05, 2000);
  CHECK(std::isfinite(big.partial_sums.back()));
  CHECK(big.n_star > 300);
  CHECK(big.n_star < 500);
}

TEST_CASE("optimal truncation ignores vanishing terms") {
  // At x = 0 every odd term is exactly zero; a single-term minimum would stop at n = 1.
  const auto s = partial_sum(0.0, 0.3, 60);
  CHECK(s.n_star > 4);
  CHECK(s.min_term == doctest::Approx(s.envelope(s.n_star)));
}

TEST_CASE("asymptotic order") {
  const double t3[] = {1e-3};
  const auto r = asymptotic_order_check(0.0, 1, t3);
  CHECK(r[0].order == 2);
  CHECK(std::abs(r[0].ratio - (-1.0)) <= 0.01);

  const double ts[] = {1e-2, 1e-3, 1e-4};
  const auto rows = asymptotic_order_check(2.0, 3, ts);
  CHECK(rows[0].target == -5.0);
  CHECK(rows[2].rel_dev < rows[1].rel_dev);
  CHECK(rows[1].rel_dev < rows[0].rel_dev);
  CHECK(rows[2].rel_dev <= 0.01);

  const double t4[] = {1e-4};
  for (double x : {-1.5, 0.3, 2.0}) CHECK(asymptotic_order_check(x, 0, t4)[0].rel_dev <= 0.005);

  // He_1(0) = 0: the comparison moves to the next order.
  const auto z = asymptotic_order_check(0.0, 0, t4);
  CHECK(z[0].order == 2);
  CHECK(z[0].target == -1.0);
  CHECK(z[0].rel_dev <= 0.01);

  for (double x : {0.0, 0.5, 2.0})
    for (unsigned N = 0; N <= 10; ++N) {
      CAPTURE(x);
      CAPTURE(N);
      CHECK(asymptotic_order_check(x, N, t4)[0].rel_dev <= 0.01);
    }
}

TEST_CASE("optimal truncation bound") {
  for (const auto [x, t] : {std::pair{0.0, 0.05}, {1.0, 0.045}, {-2.0, 0.04}, {1.7, -0.05}, {0.4, 0.3}}) {
    const auto c = truncation_check(x, t, static_cast<unsigned>(1.5 / (t * t)) + 10);
    CAPTURE(x);
    CAPTURE(t);
    CHECK(c.error <= 2.0 * c.min_term);
  }
}

TEST_CASE("characteristics of g") {
  CHECK(characteristic_check_g({0.0, 0.1}, {-2.5, 1.0 / 7.5}) <= 1e-13);
  CHECK(characteristic_check_g({0.4, 0.3}, {0.4, 0.3}) == 0.0);
  CHECK_THROWS_AS(characteristic_check_g({0.0, 0.1}, {0.0, 0.2}), hegf::usage_error);

  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> xs(-3.0, 3.0), ts(0.05, 1.0);
  int n = 0;
  while (n < 200) {
    const double x1 = xs(rng);
    const double sign = n % 2 == 0 ? 1.0 : -1.0;
    const double t1 = sign * ts(rng), t2 = sign * ts(rng);
    const GenFunPoint p1(x1, t1);
    const GenFunPoint p2(p1.u() + 1.0 / t2, t2);
    if (!p1.positive_branch() || !p2.positive_branch()) continue;
    CHECK(characteristic_check_g(p1, p2) <= 1e-12 * std::abs(characteristic_invariant_g(p1)));
    ++n;
  }
}

TEST_CASE("classical generating function") {
  CHECK(classic_g(2.3, 0.0) == 1.0);
  const auto c = classic_checks(1.7, -0.4);
  CHECK(std::abs(c.pde_residual) <= 1e-14 * c.pde_scale);
  const auto a = classic_checks(3.0, 1.0);
  const auto b = classic_checks(5.0, 3.0);
  CHECK(a.psi == b.psi);
  CHECK(rel(a.invariant, b.invariant) <= 1e-13);
  CHECK(rel(a.invariant, std::exp(-2.0)) <= 1e-13);
  // Coefficients of exp(x t - t^2/2) are He_n(x)/n!.
  double sum = 0.0, fact = 1.0;
  for (unsigned n = 0; n <= 30; ++n) {
    if (n > 0) fact *= n;
    sum += std::pow(0.3, n) * he_eval(n, 1.1) / fact;
  }
  CHECK(rel(sum, classic_g(1.1, 0.3)) <= 1e-14);
}
