#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace hegf {

// Evaluation point (x, t) of g(x, t) = sum_n t^n He_n(x).
//
// z = (1 - x t)^2 / (2 t^2) is the incomplete-gamma argument and
// u = x - 1/t the characteristic coordinate: t g(x, t) is a function of u
// alone (for a fixed sign of t).
class GenFunPoint {
 public:
  // Throws domain_error when t == 0 or either coordinate is not finite.
  GenFunPoint(double x, double t);

  double x() const noexcept { return x_; }
  double t() const noexcept { return t_; }
  double one_minus_xt() const noexcept { return one_minus_xt_; }
  double z() const noexcept;
  double u() const noexcept { return x_ - 1.0 / t_; }

  // |x t| < 1, where sum (x t)^n converges. Recorded, never enforced.
  bool series_domain() const noexcept { return std::abs(x_ * t_) < 1.0; }
  // 1 - x t > 0, the branch on which the closed form was derived.
  bool positive_branch() const noexcept { return one_minus_xt_ > 0.0; }

 private:
  double x_;
  double t_;
  double one_minus_xt_;
};

enum class Branch {
  positive_only,  // reject 1 - x t <= 0
  extended,       // continue through the erfc form past 1 - x t = 0
};

// g(x, t) = sqrt(pi) / (sqrt(2) |t|) * erfcx((1 - x t) / (sqrt(2) |t|)).
// Never forms exp(z). Throws domain_error off the positive branch unless
// branch == Branch::extended, and overflow_error if the extended value
// exceeds the double range.
double g_closed(const GenFunPoint& p, Branch branch = Branch::positive_only);

// The same function through exp(z) Gamma(1/2, z) / sqrt(2 t^2), with the
// scaled incomplete gamma kernel. Positive branch only: z has lost the sign
// of 1 - x t.
double g_closed_gamma_form(const GenFunPoint& p);

struct GenFunGradient {
  double dt;
  double dx;
};

// Analytic partial derivatives
//   dg/dt = -g/t - (1 - x t) g / t^3 + 1/t^3,
//   dg/dx = -(1 - x t) g / t + 1/t,
// valid for either sign of t.
GenFunGradient g_gradient(const GenFunPoint& p, Branch branch = Branch::positive_only);

struct PdeResidual {
  double residual;  // t^2 dg/dt - dg/dx + t g
  double scale;     // largest magnitude among the summands after expansion
  double scaled() const noexcept { return scale > 0.0 ? std::abs(residual) / scale : std::abs(residual); }
};

PdeResidual pde_residual(const GenFunPoint& p, Branch branch = Branch::positive_only);

// Terms t^n He_n(x), n = 0..N, of the (divergent) series and their partial sums.
//
// Optimal truncation uses the two-term envelope
//   e_n = max(|terms[n]|, |terms[n+1]|),  0 <= n < N,
// n_star = argmin e_n (smallest index on ties) and min_term = e_{n_star}.
// A single-term minimum is unusable: terms vanish exactly (x = 0, x = 1, ...)
// or nearly so at zeros of He_n, and such a term says nothing about the
// size of the remainder. For N == 0, n_star = 0 and min_term = 1.
struct TruncatedSeries1D {
  std::vector<double> terms;
  std::vector<double> partial_sums;
  std::size_t n_star = 0;
  double min_term = 0.0;

  double envelope(std::size_t n) const;
};

// Terms are built by the scaled recurrence
// T_{n+1} = t (x T_n - n t T_{n-1}), so no He_n is ever formed and large N
// does not overflow. Throws domain_error for non-finite x or t.
TruncatedSeries1D partial_sum(double x, double t, unsigned N);

// One row of the asymptotic-order check: r(t) = (g - S_N) / t^{N+1},
// which tends to He_{N+1}(x) as t -> 0. When He_{N+1}(x) is exactly zero
// (x = 0, N even) S_{N+1} = S_N, the remainder starts one order later and the
// row compares (g - S_N) / t^{N+2} with He_{N+2}(x) instead; `order` records
// which power was used.
struct OrderRow {
  double t;
  unsigned order;   // N + 1, or N + 2 when He_{N+1}(x) == 0
  double ratio;     // (g - S_N) / t^order
  double target;    // He_order(x)
  double rel_dev;   // |ratio - target| / |target|
};
// The remainder g - S_N falls below double rounding long before t is small
// enough for the ratio to settle, so both g and S_N are evaluated with
// 200 significant digits. Requires the positive branch at every t.
std::vector<OrderRow> asymptotic_order_check(double x, unsigned N, std::span<const double> t_list);

// Optimal-truncation measurement with the same 200-digit evaluation:
// error = |g - S_{n_star}|, ratio = error / min_term.
struct TruncationCheck {
  std::size_t n_star;
  double min_term;
  double error;
  double ratio;
};

TruncationCheck truncation_check(double x, double t, unsigned N);

// t g(x, t), constant along u = x - 1/t.
double characteristic_invariant_g(const GenFunPoint& p);

// |t1 g(p1) - t2 g(p2)| for two positive-branch points on the same
// characteristic. Throws usage_error when u differs beyond rounding.
double characteristic_check_g(const GenFunPoint& p1, const GenFunPoint& p2);

// Classical exponential generating function G(x, t) = exp(x t - t^2 / 2).
double classic_g(double x, double t);

struct ClassicCheck {
  double g;
  double dg_dx;         // t G
  double dg_dt;         // (x - t) G
  double pde_residual;  // dG/dx + dG/dt - x G
  double pde_scale;
  double invariant;     // exp(-x^2/2) G, constant along x - t
  double psi;           // x - t
};

ClassicCheck classic_checks(double x, double t);

}  // namespace hegf
