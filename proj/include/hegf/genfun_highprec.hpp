#pragma once

#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace hegf::highprec {

// 200 significant digits; resolves series remainders down to ~1e-190.
using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<200>,
                                           boost::multiprecision::et_off>;

// Closed form of g(x, t) on the positive branch 1 - x t > 0, either sign of t.
Real g_closed(const Real& x, const Real& t);

// t^n He_n(x), n = 0..N.
std::vector<Real> series_terms(const Real& x, const Real& t, unsigned N);

}  // namespace hegf::highprec
