#include "hegf/special_fn.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "golden_values.hpp"
#include "hegf/errors.hpp"

using namespace hegf;
using cplx = std::complex<double>;

namespace {

double rel(double a, double b) { return a == b ? 0.0 : std::abs(a - b) / std::abs(b); }
double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

constexpr double kSqrtPi = 1.7724538509055160273;

}  // namespace

TEST_CASE("erfc examples") {
  CHECK(hegf::erfc(0.0) == 1.0);
  CHECK(std::abs(hegf::erfc(-1.25) - (2.0 - hegf::erfc(1.25))) <= 1e-15);
  CHECK(rel(hegf::erfc(1.0), 0.1572992070502851307) <= 1e-15);
  CHECK(hegf::erfc(30.0) == 0.0);
  CHECK(hegf::erfc(-30.0) == 2.0);
  CHECK_THROWS_AS(hegf::erfc(std::nan("")), hegf::domain_error);
  CHECK_THROWS_AS(hegf::erfc(INFINITY), hegf::domain_error);
}

TEST_CASE("erfcx examples") {
  CHECK(erfcx(0.0) == 1.0);
  CHECK(rel(erfcx(std::sqrt(1200.0)), 0.01627997271582694) <= 1e-14);

  // Five terms of the large-x expansion are good to ~1e-15 at x = 50.
  const double x = 50.0;
  const double u = 1.0 / (2.0 * x * x);
  const double series = (1.0 - u + 3.0 * u * u - 15.0 * u * u * u + 105.0 * u * u * u * u) / (kSqrtPi * x);
  CHECK(rel(erfcx(x), series) <= 1e-13);
  CHECK(rel(erfcx(x), 0.011281536265323773) <= 1e-15);

  CHECK(rel(erfcx(1e300), 1.0 / (kSqrtPi * 1e300)) <= 1e-15);
  CHECK(std::isinf(erfcx(-27.0)));
  CHECK_THROWS_AS(erfcx(std::nan("")), hegf::domain_error);
}

TEST_CASE("erfcx against the 50-digit table") {
  for (const auto& p : golden::kErfcx) {
    CAPTURE(p.x);
    CHECK(rel(erfcx(p.x), p.value) <= 1e-13);
  }
  for (const auto& p : golden::kErfc) {
    CAPTURE(p.x);
    if (p.value == 0.0)
      CHECK(hegf::erfc(p.x) < 1e-300);
    else
      CHECK(rel(hegf::erfc(p.x), p.value) <= 1e-13);
  }
}

TEST_CASE("complex erfcx against the 50-digit table") {
  double worst = 0.0;
  for (const auto& p : golden::kErfcxComplex) {
    CAPTURE(p.re);
    CAPTURE(p.im);
    const double e = rel(erfcx_complex({p.re, p.im}), cplx(p.value_re, p.value_im));
    CHECK(e <= 1e-10);
    worst = std::max(worst, e);
  }
  // Observed worst is ~7e-15; a large jump means a kernel regressed.
  CHECK(worst <= 1e-13);
}

TEST_CASE("complex erfcx examples") {
  CHECK(erfcx_complex(0.0) == cplx(1.0, 0.0));
  for (double x : {0.5, 3.0, 20.0}) CHECK(rel(erfcx_complex(x), cplx(erfcx(x), 0.0)) <= 1e-13);
  CHECK(rel(erfcx_complex({2.0, 3.0}), cplx(0.09271076642644333399, -0.1283169622282615754)) <= 1e-11);
}

TEST_CASE("complex kernels agree across region boundaries") {
  for (int k = -90; k <= 90; k += 3) {
    const double th = k * std::numbers::pi / 180.0;
    const auto a = std::polar(detail::kComplexTaylorRadius, th);
    const auto b = std::polar(detail::kComplexFractionRadius, th);
    CAPTURE(k);
    CHECK(rel(detail::erfcx_taylor(a), detail::erfcx_quadrature(a)) <= 1e-13);
    CHECK(rel(detail::erfcx_continued_fraction(b), detail::erfcx_quadrature(b)) <= 1e-13);
  }
  for (double x = 3.9; x <= 4.1; x += 0.01)
    CHECK(rel(detail::erfcx_rational(x), detail::erfcx_continued_fraction(x)) <= 1e-14);
}

TEST_CASE("complex erfcx overflow carries the exponent") {
  const cplx w(-30.0, 1.0);
  try {
    (void)erfcx_complex(w);
    FAIL("expected overflow_error");
  } catch (const hegf::overflow_error& e) {
    CHECK(e.exponent() == doctest::Approx(std::real(w * w)));
  }
  CHECK_THROWS_AS(erfcx_complex({std::nan(""), 0.0}), hegf::domain_error);
}

TEST_CASE("conjugate symmetry") {
  for (double re : {-3.0, -0.5, 0.0, 0.7, 2.0, 6.5, 9.0})
    for (double im : {0.1, 1.0, 4.0, 8.0}) {
      const cplx w(re, im);
      CHECK(rel(erfcx_complex(std::conj(w)), std::conj(erfcx_complex(w))) <= 1e-15);
    }
}

TEST_CASE("erfcx identities on [0, 6]") {
  for (int i = 0; i <= 600; ++i) {
    const double x = i / 100.0;
    CAPTURE(x);
    CHECK(std::abs(hegf::erfc(x) + hegf::erfc(-x) - 2.0) <= 1e-14);
    CHECK(std::abs(kSqrtPi * hegf::erfc(x) - gamma_half_upper(x * x)) <= 1e-14);
    CHECK(rel(erfcx(x) * std::exp(-x * x), hegf::erfc(x)) <= 1e-13);
  }
}

TEST_CASE("x erfcx(x) rises toward 1/sqrt(pi)") {
  double prev = 0.0;
  for (int i = 0; i <= 900; ++i) {
    const double x = std::pow(10.0, -3.0 + i / 100.0);
    const double v = x * erfcx(x);
    CHECK(v >= prev);
    CHECK(v <= 1.0 / kSqrtPi);
    prev = v;
  }
}

TEST_CASE("incomplete gamma") {
  CHECK(rel(gamma_half_upper(0.0), kSqrtPi) <= 1e-16);
  CHECK(rel(gamma_half_upper_scaled(1200.0), 0.02885550033280419) <= 1e-14);
  CHECK(gamma_half_upper(INFINITY) == 0.0);
  CHECK(gamma_half_upper(1e6) == 0.0);
  CHECK(gamma_half_upper_scaled(1e6) > 0.0);
  CHECK_THROWS_AS(gamma_half_upper(-1.0), hegf::domain_error);
  CHECK_THROWS_AS(gamma_half_upper_scaled(std::nan("")), hegf::domain_error);
}

TEST_CASE("normal cdf") {
  CHECK(normal_cdf(1.7, {1.7, 3.0}) == 0.5);
  CHECK(rel(normal_cdf(0.0, {10.0, 1.0}), 7.619853024160526066e-24) <= 1e-12);
  const double x = 1.3, mu = 0.4, sigma = 2.0;
  const double upper = 1.0 - 0.5 * hegf::erfc((x - mu) / (std::numbers::sqrt2 * sigma));
  CHECK(std::abs(upper - normal_cdf(x, {mu, sigma})) <= 1e-15);
  CHECK_THROWS_AS(normal_cdf(0.0, {0.0, 0.0}), hegf::domain_error);
  CHECK_THROWS_AS(normal_cdf(0.0, {0.0, -1.0}), hegf::domain_error);
  CHECK_THROWS_AS(normal_cdf(INFINITY, {}), hegf::domain_error);
}
