#include "hegf/genfun_highprec.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/erf.hpp>

#include "hegf/errors.hpp"

namespace hegf::highprec {

Real g_closed(const Real& x, const Real& t) {
  const Real one_minus_xt = 1 - x * t;
  if (t == 0 || one_minus_xt <= 0) throw domain_error("highprec::g_closed: need t != 0 and 1 - x t > 0");
  const Real scale = boost::math::constants::root_two<Real>() * abs(t);
  const Real arg = one_minus_xt / scale;
  return boost::math::constants::root_pi<Real>() / scale * boost::math::erfc(arg) * exp(arg * arg);
}

std::vector<Real> series_terms(const Real& x, const Real& t, unsigned N) {
  std::vector<Real> terms(N + 1);
  terms[0] = 1;
  if (N >= 1) terms[1] = x * t;
  for (unsigned n = 1; n < N; ++n) terms[n + 1] = t * (x * terms[n] - n * t * terms[n - 1]);
  return terms;
}

}  // namespace hegf::highprec
