#include "hegf/special_fn.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "hegf/errors.hpp"

namespace hegf {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kInvSqrtPi = 0.56418958354775628695;

// Largest argument accepted by exp() without overflow.
constexpr double kExpMax = 709.782712893384;

// Beyond this x, erfcx(x) = 1/(sqrt(pi) x) to double precision.
constexpr double kErfcxHuge = 6.71e7;

// 2 exp(x^2) overflows below this.
constexpr double kErfcxNegLimit = -26.628;

void require_finite(double x, const char* fn) {
  if (!std::isfinite(x)) throw domain_error(std::string(fn) + ": argument is not finite");
}

// exp(s * x^2) for s = +1 or -1 with x^2 split as hi + lo where hi is exact.
// Avoids the relative error x^2 * eps that a rounded x*x would introduce.
double exp_square(double x, double sign) {
  const double hi = std::trunc(x * 16.0) / 16.0;
  const double lo = (x - hi) * (x + hi);
  return std::exp(sign * hi * hi) * std::exp(sign * lo);
}

// W. J. Cody's rational approximation of erf on |x| <= 0.46875.
double erf_small(double x) {
  static constexpr std::array<double, 5> a{3.1611237438705656, 113.864154151050156,
                                           377.485237685302021, 3209.37758913846947,
                                           .185777706184603153};
  static constexpr std::array<double, 4> b{23.6012909523441209, 244.024637934444173,
                                           1282.61652607737228, 2844.23683343917062};
  const double y2 = x * x;
  double num = a[4] * y2;
  double den = y2;
  for (int i = 0; i < 3; ++i) {
    num = (num + a[i]) * y2;
    den = (den + b[i]) * y2;
  }
  return x * (num + a[3]) / (den + b[3]);
}

// Gauss-Legendre, 20 nodes on [-1, 1]; non-negative half (the rule is symmetric).
constexpr std::array<double, 10> kGaussNodes{
    0.07652652113349734, 0.2277858511416451, 0.37370608871541955, 0.5108670019508271,
    0.636053680726515,   0.7463319064601508, 0.8391169718222188,  0.9122344282513258,
    0.9639719272779138,  0.9931285991850949};
constexpr std::array<double, 10> kGaussWeights{
    0.15275338713072578, 0.14917298647260366, 0.14209610931838187, 0.13168863844917653,
    0.11819453196151825, 0.10193011981724026, 0.08327674157670467, 0.06267204833410944,
    0.04060142980038622, 0.017614007139153273};

// 1/Gamma(n/2 + 1), n = 0..kTaylorTerms-1.
constexpr int kTaylorTerms = 64;

constexpr std::array<double, kTaylorTerms> make_taylor_coefficients() {
  std::array<double, kTaylorTerms> c{};
  c[0] = 1.0;
  c[1] = 2.0 * kInvSqrtPi;
  for (int n = 2; n < kTaylorTerms; ++n) c[n] = c[n - 2] / (0.5 * n);
  return c;
}

constexpr auto kTaylorCoefficients = make_taylor_coefficients();

}  // namespace

namespace detail {

double erfcx_rational(double x) {
  // Cody's approximation of exp(x^2) erfc(x) on 0.46875 <= x <= 4.
  static constexpr std::array<double, 9> c{
      .564188496988670089, 8.88314979438837594, 66.1191906371416295,
      298.635138197400131, 881.95222124176909,  1712.04761263407058,
      2051.07837782607147, 1230.33935479799725, 2.15311535474403846e-8};
  static constexpr std::array<double, 8> d{
      15.7449261107098347, 117.693950891312499, 537.181101862009858, 1621.38957456669019,
      3290.79923573345963, 4362.61909014324716, 3439.36767414372164, 1230.33935480374942};
  double num = c[8] * x;
  double den = x;
  for (int i = 0; i < 7; ++i) {
    num = (num + c[i]) * x;
    den = (den + d[i]) * x;
  }
  return (num + c[7]) / (den + d[7]);
}

double erfcx_continued_fraction(double x) {
  // erfcx(x) = 1/(sqrt(pi) f), f = x + (1/2)/(x + (2/2)/(x + (3/2)/(x + ...))),
  // evaluated forward with the modified Lentz method.
  constexpr double tiny = 1e-300;
  double f = x;
  double c = f;
  double d = 0.0;
  for (int k = 1; k < 5000; ++k) {
    const double a = 0.5 * k;
    d = x + a * d;
    if (d == 0.0) d = tiny;
    d = 1.0 / d;
    c = x + a / c;
    if (c == 0.0) c = tiny;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return kInvSqrtPi / f;
}

std::complex<double> erfcx_taylor(std::complex<double> w) {
  // erfcx(w) = sum_n (-w)^n / Gamma(n/2 + 1); Horner in -w.
  const std::complex<double> v = -w;
  std::complex<double> sum = kTaylorCoefficients[kTaylorTerms - 1];
  for (int n = kTaylorTerms - 2; n >= 0; --n) sum = sum * v + kTaylorCoefficients[n];
  return sum;
}

std::complex<double> erfcx_quadrature(std::complex<double> w) {
  // erfcx(w) = (2/sqrt(pi)) int_0^inf exp(-s^2 - 2 w s) ds, bounded integrand
  // for Re(w) >= 0. Truncated at s = 6.5 (tail below 1e-19) and split into
  // 12 Gauss-Legendre panels, enough for the oscillation of |Im w| < 7.
  constexpr double upper = 6.5;
  constexpr int panels = 12;
  constexpr double h = upper / panels;
  std::complex<double> sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * h;
    for (std::size_t i = 0; i < kGaussNodes.size(); ++i) {
      const double off = 0.5 * h * kGaussNodes[i];
      const double s1 = mid - off;
      const double s2 = mid + off;
      sum += kGaussWeights[i] * (std::exp(-s1 * s1 - 2.0 * w * s1) + std::exp(-s2 * s2 - 2.0 * w * s2));
    }
  }
  return sum * (h * kInvSqrtPi);
}

std::complex<double> erfcx_continued_fraction(std::complex<double> w) {
  constexpr double tiny = 1e-300;
  std::complex<double> f = w;
  std::complex<double> c = f;
  std::complex<double> d = 0.0;
  for (int k = 1; k < 5000; ++k) {
    const double a = 0.5 * k;
    d = w + a * d;
    if (d == 0.0) d = tiny;
    d = 1.0 / d;
    c = w + a / c;
    if (c == 0.0) c = tiny;
    const std::complex<double> delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return kInvSqrtPi / f;
}

}  // namespace detail

double erfcx(double x) {
  require_finite(x, "erfcx");
  if (x < 0.0) {
    if (x < kErfcxNegLimit) return std::numeric_limits<double>::infinity();
    return 2.0 * exp_square(x, 1.0) - erfcx(-x);
  }
  if (x <= detail::kErfSmallLimit) return std::exp(x * x) * (1.0 - erf_small(x));
  if (x <= detail::kErfcxRationalLimit) return detail::erfcx_rational(x);
  if (x >= kErfcxHuge) return kInvSqrtPi / x;
  return detail::erfcx_continued_fraction(x);
}

double erfc(double x) {
  require_finite(x, "erfc");
  const double ax = std::abs(x);
  if (ax <= detail::kErfSmallLimit) return 1.0 - erf_small(x);
  const double upper = ax > 27.3 ? 0.0 : exp_square(ax, -1.0) * erfcx(ax);
  return x > 0.0 ? upper : 2.0 - upper;
}

double gamma_half_upper(double z) {
  if (std::isnan(z) || z < 0.0) throw domain_error("gamma_half_upper: z must be >= 0");
  if (std::isinf(z)) return 0.0;
  return kSqrtPi * erfc(std::sqrt(z));
}

double gamma_half_upper_scaled(double z) {
  if (std::isnan(z) || z < 0.0) throw domain_error("gamma_half_upper_scaled: z must be >= 0");
  if (std::isinf(z)) return 0.0;
  return kSqrtPi * erfcx(std::sqrt(z));
}

double normal_cdf(double x, const NormalParams& p) {
  if (!(p.sigma > 0.0) || !std::isfinite(p.sigma) || !std::isfinite(p.mu))
    throw domain_error("normal_cdf: need finite mu and sigma > 0");
  require_finite(x, "normal_cdf");
  return 0.5 * erfc((p.mu - x) / (std::numbers::sqrt2 * p.sigma));
}

std::complex<double> erfcx_complex(std::complex<double> w) {
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
    throw domain_error("erfcx_complex: argument is not finite");
  if (w.imag() == 0.0) return erfcx(w.real());

  if (w.real() < 0.0) {
    const double x = w.real();
    const double y = w.imag();
    const double re_sq = (x - y) * (x + y);
    if (re_sq > kExpMax - std::numbers::ln2)
      throw overflow_error("erfcx_complex: 2 exp(w^2) overflows", re_sq);
    const std::complex<double> e = std::polar(2.0 * std::exp(re_sq), 2.0 * x * y);
    return e - erfcx_complex(-w);
  }

  const double r = std::abs(w);
  if (r < detail::kComplexTaylorRadius) return detail::erfcx_taylor(w);
  if (r < detail::kComplexFractionRadius) return detail::erfcx_quadrature(w);
  return detail::erfcx_continued_fraction(w);
}

}  // namespace hegf
