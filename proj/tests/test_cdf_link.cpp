#include "hegf/cdf_link.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hegf/errors.hpp"
#include "hegf/hermite.hpp"
#include "hegf/special_fn.hpp"

using namespace hegf;

TEST_CASE("series terms") {
  const auto a = cdf_series_terms(0.7, 5.0, 12);
  for (unsigned n = 0; n <= 12; ++n) CHECK(a[n] == doctest::Approx(he_eval(n, 0.7) / std::pow(5.0, n + 1)).epsilon(1e-14));
  CHECK_THROWS_AS(cdf_series_terms(0.0, 0.0, 3), hegf::domain_error);
  CHECK_THROWS_AS(cdf_asymptotic(NAN, 3.0, 3), hegf::domain_error);
}

TEST_CASE("normal tail from the series") {
  const auto r = cdf_asymptotic(0.0, 10.0, 40);
  CHECK(r.reference == doctest::Approx(7.619853024160526066e-24).epsilon(1e-14));
  CHECK(r.rel_error <= 1e-12);

  const auto one = cdf_asymptotic(0.0, 10.0, 0);
  CHECK(one.raw_sum == 0.1);
  CHECK(one.value == doctest::Approx(std::exp(-50.0) / (std::sqrt(2.0 * std::numbers::pi) * 10.0)).epsilon(1e-14));

  CHECK(cdf_asymptotic(1.0, 8.0, 30).rel_error <= 1e-9);
}

TEST_CASE("single sum equals the Mills ratio form") {
  // sum He_n(x)/mu^(n+1) ~ sqrt(2 pi) exp((mu-x)^2/2) Phi(x; mu, 1)
  for (const auto [x, mu] : {std::pair{0.0, 10.0}, {0.5, 12.0}, {-1.0, 9.0}}) {
    const auto a = cdf_series_terms(x, mu, 30);
    double s = 0.0;
    for (double v : a) s += v;
    const double direct = std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * (mu - x) * (mu - x)) *
                          normal_cdf(x, {mu, 1.0});
    CHECK(s == doctest::Approx(direct).epsilon(1e-12));
    CHECK(s == doctest::Approx(mills_ratio_reference(x, mu)).epsilon(1e-12));
  }
}

TEST_CASE("squared identity") {
  CHECK(squared_identity_residual(0.0, 10.0, 40) <= 1e-10);
  CHECK(squared_identity_residual(0.5, 12.0, 30) <= 1e-9);
  // One term: 1/mu^2 against the squared Mills ratio; recorded, not small.
  const double m = mills_ratio_reference(0.0, 10.0);
  CHECK(squared_identity_residual(0.0, 10.0, 0) == doctest::Approx(std::abs(0.01 - m * m) / (m * m)));
}

TEST_CASE("truncated square is the Cauchy product") {
  const std::vector<double> a{1.0, 2.0, 3.0};
  CHECK(truncated_square(a) == std::vector<double>{1.0, 4.0, 10.0});

  const auto t = cdf_series_terms(0.5, 8.0, 20);
  const auto c = truncated_square(t);
  double lhs = 0.0, s = 0.0, cross = 0.0;
  for (double v : c) lhs += v;
  for (double v : t) s += v;
  for (std::size_t n = 0; n < t.size(); ++n)
    for (std::size_t m = 0; m < t.size(); ++m)
      if (n + m >= t.size()) cross += t[n] * t[m];
  CHECK(std::abs(lhs - (s * s - cross)) <= 1e-15);
}

TEST_CASE("error shrinks as mu grows") {
  for (double x : {0.0, 0.5, 1.0}) {
    double prev = INFINITY;
    for (double mu : {6.0, 8.0, 10.0, 12.0}) {
      const double e = cdf_asymptotic(x, mu, 10).rel_error;
      CHECK(e < prev);
      prev = e;
    }
  }
}

TEST_CASE("series turns around at mu = 3") {
  const auto a = cdf_series_terms(0.0, 3.0, 40);
  CHECK(std::abs(a[20]) > std::abs(a[10]));
  CHECK(std::abs(a[40]) > std::abs(a[20]));
  std::size_t smallest = 0;
  for (std::size_t n = 0; n <= 40; n += 2)
    if (std::abs(a[n]) < std::abs(a[smallest])) smallest = n;
  CHECK(smallest > 0);
  CHECK(smallest < 20);
}
