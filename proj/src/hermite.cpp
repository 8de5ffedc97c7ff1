#include "hegf/hermite.hpp"

#include <algorithm>

#include "hegf/errors.hpp"

namespace hegf {

double he_eval(unsigned n, double x) {
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = x;
  for (unsigned k = 1; k < n; ++k) {
    const double next = x * cur - k * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> he_sequence(unsigned nmax, double x) {
  std::vector<double> he(nmax + 1);
  he[0] = 1.0;
  if (nmax >= 1) he[1] = x;
  for (unsigned k = 1; k < nmax; ++k) he[k + 1] = x * he[k] - k * he[k - 1];
  return he;
}

double he_derivative(unsigned n, double x) {
  const auto he = he_sequence(n + 1, x);
  return x * he[n] - he[n + 1];
}

double HermiteCoeffs::evaluate(double x) const {
  long double acc = 0.0L;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = acc * x + static_cast<long double>(*it);
  return static_cast<double>(acc);
}

HermiteCoeffs he_coefficients(unsigned n) {
  if (n > kMaxExactDegree)
    throw capacity_error("he_coefficients: degree " + std::to_string(n) + " exceeds " +
                         std::to_string(kMaxExactDegree));

  // c_{k+1}[j] = c_k[j-1] - k c_{k-1}[j], with overflow checks on every step.
  std::vector<ExactInt> prev{1};
  std::vector<ExactInt> cur{0, 1};
  if (n == 0) return {0, prev};
  for (unsigned k = 1; k < n; ++k) {
    std::vector<ExactInt> next(k + 2, 0);
    for (unsigned j = 0; j <= k + 1; ++j) {
      const ExactInt shifted = j >= 1 ? cur[j - 1] : 0;
      const ExactInt lower = j < prev.size() ? prev[j] : 0;
      ExactInt scaled;
      ExactInt value;
      if (__builtin_mul_overflow(lower, static_cast<ExactInt>(k), &scaled) ||
          __builtin_sub_overflow(shifted, scaled, &value))
        throw capacity_error("he_coefficients: 128-bit overflow at degree " +
                             std::to_string(k + 1));
      next[j] = value;
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {n, cur};
}

std::string to_string(ExactInt v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  // Work with negative values so the minimum does not overflow.
  if (!neg) v = -v;
  std::string out;
  while (v != 0) {
    out.push_back(static_cast<char>('0' - static_cast<int>(v % 10)));
    v /= 10;
  }
  if (neg) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace hegf
