#pragma once

#include <cstddef>
#include <vector>

#include "hegf/genfun.hpp"

namespace hegf {

// 2x2 real mixing matrix [[a, b], [c, d]] acting on row vectors:
// (t', s') = (t, s) M, i.e. t' = a t + c s and s' = b t + d s.
struct MixMatrix {
  double a = 1.0;
  double b = 0.0;
  double c = 0.0;
  double d = 1.0;

  static MixMatrix identity() { return {}; }

  double determinant() const noexcept { return a * d - b * c; }
  // A singular M maps (t, s) onto a line; g2_closed is then undefined on a
  // whole line of (t, s), but the coefficients stay well defined.
  bool singular() const noexcept { return determinant() == 0.0; }

  MixMatrix scaled(double lambda) const noexcept { return {lambda * a, lambda * b, lambda * c, lambda * d}; }

  // Matrix M' with He_{n,m}(M; x, y) = He_{m,n}(M'; y, x).
  MixMatrix swapped() const noexcept { return {d, c, b, a}; }
};

struct MixedPair {
  double t_prime;
  double s_prime;
};

MixedPair mix_transform(const MixMatrix& m, double t, double s);

// g(x, t') g(y, s'), the bivariate generating function in overflow-safe form.
// Throws domain_error naming the degenerate factor when t' or s' is zero, or
// when a factor is off the positive branch (unless branch is extended).
double g2_closed(double x, double y, double t, double s, const MixMatrix& m,
                 Branch branch = Branch::positive_only);

// Coefficient of t^n s^m in the bivariate generating function,
//
//   He_{n,m}(M; x, y) = sum_{k+l=n+m} He_k(x) He_l(y) C(k, l, n),
//   C(k, l, n) = sum_j binom(k, j) a^j c^{k-j} binom(l, n-j) b^{n-j} d^{l-n+j},
//
// with j from max(0, n - l) to min(k, n): the t^n s^m coefficient of
// (a t + c s)^k (b t + d s)^l. Only k + l = n + m contributes because both
// forms are homogeneous of degree one.
double he2_coeff(const MixMatrix& m, unsigned n, unsigned mm, double x, double y);

// Dense truncated bivariate series: coeffs[n][m] multiplies t^n s^m.
// Products drop every monomial with n > max_n, m > max_m or, when set,
// n + m > max_total.
class TruncatedSeries2D {
 public:
  TruncatedSeries2D(std::size_t max_n, std::size_t max_m, std::size_t max_total = kNoTotalLimit);

  static constexpr std::size_t kNoTotalLimit = static_cast<std::size_t>(-1);

  std::size_t max_n() const noexcept { return max_n_; }
  std::size_t max_m() const noexcept { return max_m_; }
  std::size_t max_total() const noexcept { return max_total_; }

  double& at(std::size_t n, std::size_t m) { return coeffs_.at(n * (max_m_ + 1) + m); }
  double at(std::size_t n, std::size_t m) const { return coeffs_.at(n * (max_m_ + 1) + m); }
  bool kept(std::size_t n, std::size_t m) const noexcept {
    return n <= max_n_ && m <= max_m_ && (max_total_ == kNoTotalLimit || n + m <= max_total_);
  }

  TruncatedSeries2D& operator+=(const TruncatedSeries2D& other);
  TruncatedSeries2D& operator*=(double k);

  friend TruncatedSeries2D operator+(TruncatedSeries2D lhs, const TruncatedSeries2D& rhs) { return lhs += rhs; }
  friend TruncatedSeries2D operator*(const TruncatedSeries2D& lhs, const TruncatedSeries2D& rhs);

 private:
  void require_same_shape(const TruncatedSeries2D& other) const;

  std::size_t max_n_;
  std::size_t max_m_;
  std::size_t max_total_;
  std::vector<double> coeffs_;
};

inline constexpr unsigned kMaxOracleDegree = 16;

// Brute-force coefficient grid: substitutes t' = a t + c s and s' = b t + d s
// into the truncated sums sum_k He_k(x) t'^k and sum_l He_l(y) s'^l and
// multiplies, keeping total degree <= N. Throws capacity_error for N > 16.
TruncatedSeries2D series_product_oracle(const MixMatrix& m, double x, double y, unsigned N);

}  // namespace hegf
