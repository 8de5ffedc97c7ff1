#include "hegf/bivariate.hpp"

#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "hegf/errors.hpp"
#include "hegf/hermite.hpp"

using namespace hegf;

namespace {

const MixMatrix kShear{1.0, 1.0, 0.0, 1.0};
const MixMatrix kSwap{0.0, 1.0, 1.0, 0.0};

double bound(const MixMatrix& m, unsigned n, unsigned mm, double x, double y) {
  double s = 0.0;
  for (unsigned k = 0; k <= n + mm; ++k)
    s += std::abs(he_eval(k, x) * he_eval(n + mm - k, y)) * std::pow(std::abs(m.a) + std::abs(m.c), k) *
         std::pow(std::abs(m.b) + std::abs(m.d), n + mm - k);
  return s;
}

}  // namespace

TEST_CASE("matrix helpers") {
  CHECK(MixMatrix::identity().determinant() == 1.0);
  CHECK(kSwap.determinant() == -1.0);
  CHECK(MixMatrix{1.0, 2.0, 2.0, 4.0}.singular());
  const auto s = MixMatrix{1.0, 2.0, 3.0, 4.0}.swapped();
  CHECK((s.a == 4.0 && s.b == 3.0 && s.c == 2.0 && s.d == 1.0));
}

TEST_CASE("mix_transform") {
  auto p = mix_transform(MixMatrix::identity(), 0.3, -0.2);
  CHECK(p.t_prime == 0.3);
  CHECK(p.s_prime == -0.2);
  p = mix_transform(kShear, 0.1, 0.2);
  CHECK(p.t_prime == 0.1);
  CHECK(p.s_prime == doctest::Approx(0.3));
  p = mix_transform(kSwap, 0.1, 0.2);
  CHECK(p.t_prime == 0.2);
  CHECK(p.s_prime == 0.1);
}

TEST_CASE("closed form") {
  const double g = g_closed({0.0, 0.1});
  CHECK(g2_closed(0.0, 0.0, 0.1, 0.1, MixMatrix::identity()) == doctest::Approx(0.9806662919161116).epsilon(1e-14));
  CHECK(g2_closed(0.0, 0.0, 0.1, 0.1, MixMatrix::identity()) == g * g);
  CHECK(g2_closed(0.3, -0.4, 0.2, 0.15, MixMatrix::identity()) == g_closed({0.3, 0.2}) * g_closed({-0.4, 0.15}));

  // The permutation matrix exchanges the roles of t and s.
  const std::array<std::array<double, 4>, 2> cases{{{0.3, -1.2, 0.1, 0.25}, {1.5, 0.2, -0.3, 0.05}}};
  for (const auto [x, y, t, s] : cases) {
    CHECK(g2_closed(x, y, t, s, kSwap) == g2_closed(x, y, s, t, MixMatrix::identity()));
    CHECK(g2_closed(x, y, s, t, MixMatrix::identity()) == g2_closed(y, x, t, s, MixMatrix::identity()));
  }
}

TEST_CASE("closed form degeneracies name the factor") {
  try {
    (void)g2_closed(0.0, 0.0, 0.0, 0.1, MixMatrix::identity());
    FAIL("expected domain_error");
  } catch (const hegf::domain_error& e) {
    CHECK(std::string(e.what()).find("t'") != std::string::npos);
  }
  try {
    (void)g2_closed(0.0, 0.0, 0.1, 0.0, MixMatrix::identity());
    FAIL("expected domain_error");
  } catch (const hegf::domain_error& e) {
    CHECK(std::string(e.what()).find("s'") != std::string::npos);
  }
  CHECK_THROWS_AS(g2_closed(0.0, 0.0, 0.1, -0.1, kShear), hegf::domain_error);
}

TEST_CASE("coefficient formula") {
  CHECK(he2_coeff(MixMatrix::identity(), 1, 1, 0.7, -1.1) == doctest::Approx(0.7 * -1.1));
  CHECK(he2_coeff(kShear, 1, 0, 0.7, -1.1) == doctest::Approx(0.7 - 1.1));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> e(-2.0, 2.0);
  for (int i = 0; i < 10; ++i) CHECK(he2_coeff({e(rng), e(rng), e(rng), e(rng)}, 0, 0, e(rng), e(rng)) == 1.0);
  // Singular M still has well-defined coefficients.
  CHECK(std::isfinite(he2_coeff({1.0, 2.0, 2.0, 4.0}, 3, 2, 0.5, 0.5)));
}

TEST_CASE("identity matrix reduces to products") {
  for (double x : {-2.2, 0.0, 0.9})
    for (double y : {-0.4, 1.7})
      for (unsigned n = 0; n <= 12; ++n)
        for (unsigned m = 0; n + m <= 12; ++m) {
          const double ref = he_eval(n, x) * he_eval(m, y);
          CHECK(std::abs(he2_coeff(MixMatrix::identity(), n, m, x, y) - ref) <= 1e-12 * std::abs(ref));
        }
}

TEST_CASE("coefficient formula against the series product") {
  const auto grid = series_product_oracle(MixMatrix::identity(), 0.7, -1.1, 6);
  for (unsigned n = 0; n <= 6; ++n)
    for (unsigned m = 0; n + m <= 6; ++m)
      CHECK(grid.at(n, m) == doctest::Approx(he_eval(n, 0.7) * he_eval(m, -1.1)).epsilon(1e-14));

  CHECK(series_product_oracle(kShear, 0.7, -1.1, 4).at(1, 0) == doctest::Approx(0.7 - 1.1));

  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int i = 0; i < 20; ++i) {
    const MixMatrix M{double(entry(rng)), double(entry(rng)), double(entry(rng)), double(entry(rng))};
    const auto g = series_product_oracle(M, 0.7, -1.1, 8);
    for (unsigned n = 0; n <= 8; ++n)
      for (unsigned m = 0; n + m <= 8; ++m)
        CHECK(std::abs(he2_coeff(M, n, m, 0.7, -1.1) - g.at(n, m)) <= 1e-10 * bound(M, n, m, 0.7, -1.1));
  }
  CHECK_THROWS_AS(series_product_oracle(kShear, 0.0, 0.0, kMaxOracleDegree + 1), hegf::capacity_error);
}

TEST_CASE("swap covariance and homogeneity") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> e(-1.5, 1.5), lam(0.5, 2.0);
  for (int i = 0; i < 20; ++i) {
    const MixMatrix M{e(rng), e(rng), e(rng), e(rng)};
    const double x = e(rng), y = e(rng), l = lam(rng);
    for (unsigned n = 0; n <= 6; ++n)
      for (unsigned m = 0; n + m <= 6; ++m) {
        const double c = he2_coeff(M, n, m, x, y);
        const double b = bound(M, n, m, x, y);
        CHECK(std::abs(c - he2_coeff(M.swapped(), m, n, y, x)) <= 1e-12 * b);
        CHECK(std::abs(he2_coeff(M.scaled(l), n, m, x, y) - std::pow(l, n + m) * c) <= 1e-12 * std::pow(l, n + m) * b);
      }
  }
}

TEST_CASE("truncated series arithmetic") {
  TruncatedSeries2D a(3, 3, 3), b(3, 3, 3);
  a.at(0, 0) = 1.0;
  a.at(1, 0) = 2.0;
  b.at(0, 1) = 3.0;
  b.at(2, 1) = 1.0;
  const auto p = a * b;
  CHECK(p.at(0, 1) == 3.0);
  CHECK(p.at(1, 1) == 6.0);
  CHECK(p.at(2, 1) == 1.0);
  CHECK(p.at(3, 1) == 0.0);  // total degree 4 dropped
  const auto s = a + b;
  CHECK(s.at(1, 0) == 2.0);
  CHECK(s.at(2, 1) == 1.0);
  CHECK_FALSE(s.kept(2, 2));
  CHECK_THROWS_AS(a + TruncatedSeries2D(2, 2), hegf::usage_error);
}
