#include "hegf/bivariate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hegf/errors.hpp"
#include "hegf/hermite.hpp"

namespace hegf {

namespace {

double binom(unsigned n, unsigned k) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

// pow with 0^0 = 1 and exact small integer exponents.
double ipow(double base, unsigned e) {
  double r = 1.0;
  while (e != 0) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1u;
  }
  return r;
}

}  // namespace

MixedPair mix_transform(const MixMatrix& m, double t, double s) {
  return {m.a * t + m.c * s, m.b * t + m.d * s};
}

double g2_closed(double x, double y, double t, double s, const MixMatrix& m, Branch branch) {
  const auto [tp, sp] = mix_transform(m, t, s);
  if (tp == 0.0) throw domain_error("g2_closed: t' = a t + c s is zero (first factor degenerates)");
  if (sp == 0.0) throw domain_error("g2_closed: s' = b t + d s is zero (second factor degenerates)");
  const GenFunPoint first(x, tp);
  const GenFunPoint second(y, sp);
  if (branch == Branch::positive_only) {
    if (!first.positive_branch()) throw domain_error("g2_closed: 1 - x t' <= 0 in the first factor");
    if (!second.positive_branch()) throw domain_error("g2_closed: 1 - y s' <= 0 in the second factor");
  }
  return g_closed(first, branch) * g_closed(second, branch);
}

double he2_coeff(const MixMatrix& m, unsigned n, unsigned mm, double x, double y) {
  const unsigned total = n + mm;
  const auto hx = he_sequence(total, x);
  const auto hy = he_sequence(total, y);
  double sum = 0.0;
  for (unsigned k = 0; k <= total; ++k) {
    const unsigned l = total - k;
    const unsigned j_lo = n > l ? n - l : 0;
    const unsigned j_hi = std::min(k, n);
    double c = 0.0;
    for (unsigned j = j_lo; j <= j_hi; ++j) {
      c += binom(k, j) * ipow(m.a, j) * ipow(m.c, k - j) * binom(l, n - j) * ipow(m.b, n - j) *
           ipow(m.d, l - n + j);
    }
    sum += hx[k] * hy[l] * c;
  }
  return sum;
}

TruncatedSeries2D::TruncatedSeries2D(std::size_t max_n, std::size_t max_m, std::size_t max_total)
    : max_n_(max_n), max_m_(max_m), max_total_(max_total), coeffs_((max_n + 1) * (max_m + 1), 0.0) {}

void TruncatedSeries2D::require_same_shape(const TruncatedSeries2D& other) const {
  if (max_n_ != other.max_n_ || max_m_ != other.max_m_ || max_total_ != other.max_total_)
    throw usage_error("TruncatedSeries2D: shape mismatch");
}

TruncatedSeries2D& TruncatedSeries2D::operator+=(const TruncatedSeries2D& other) {
  require_same_shape(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

TruncatedSeries2D& TruncatedSeries2D::operator*=(double k) {
  for (double& v : coeffs_) v *= k;
  return *this;
}

TruncatedSeries2D operator*(const TruncatedSeries2D& lhs, const TruncatedSeries2D& rhs) {
  lhs.require_same_shape(rhs);
  TruncatedSeries2D out(lhs.max_n_, lhs.max_m_, lhs.max_total_);
  for (std::size_t n1 = 0; n1 <= lhs.max_n_; ++n1) {
    for (std::size_t m1 = 0; m1 <= lhs.max_m_; ++m1) {
      const double a = lhs.at(n1, m1);
      if (a == 0.0) continue;
      for (std::size_t n2 = 0; n1 + n2 <= lhs.max_n_; ++n2) {
        for (std::size_t m2 = 0; m1 + m2 <= lhs.max_m_; ++m2) {
          if (!out.kept(n1 + n2, m1 + m2)) continue;
          out.at(n1 + n2, m1 + m2) += a * rhs.at(n2, m2);
        }
      }
    }
  }
  return out;
}

TruncatedSeries2D series_product_oracle(const MixMatrix& m, double x, double y, unsigned N) {
  if (N > kMaxOracleDegree)
    throw capacity_error("series_product_oracle: N = " + std::to_string(N) + " exceeds " +
                         std::to_string(kMaxOracleDegree));

  const auto substituted = [&](double coef_t, double coef_s, double arg) {
    TruncatedSeries2D linear(N, N, N);
    if (N >= 1) {
      linear.at(1, 0) = coef_t;
      linear.at(0, 1) = coef_s;
    }
    const auto he = he_sequence(N, arg);
    TruncatedSeries2D power(N, N, N);
    power.at(0, 0) = 1.0;
    TruncatedSeries2D sum(N, N, N);
    for (unsigned k = 0; k <= N; ++k) {
      TruncatedSeries2D term = power;
      term *= he[k];
      sum += term;
      power = power * linear;
    }
    return sum;
  };

  return substituted(m.a, m.c, x) * substituted(m.b, m.d, y);
}

}  // namespace hegf
