#pragma once
#include <vector>

#include "germzeta/ratfun.hpp"

namespace germzeta {

// Zeta function of the surface germ f(x, y) + z^2 from the curve data of f:
// its full zeta function zf and the 2-restricted variant zf2.
RatFun1 suspend_zeta(const RatFun1& zf, const RatFun1& zf2);

// Closed forms for the parametric families, kept with their displayed
// numerator and denominator factors so substitution identities can be checked
// on the displayed shape, not only on the reduced fraction.
struct DisplayForm {
  UniPoly num;
  std::vector<UniPoly> den_factors;
  RatFun1 reduced() const;
};

namespace family {

// Plane curve family x^3 y^2 + x^k, k >= 5.
DisplayForm curve_display(long k);
RatFun1 curve_zeta2_closed(long k);  // d = 2 restriction (zero for odd k)

// Its suspension x^3 y^2 + x^k + z^2, k >= 5.
DisplayForm suspended_display(long k);
Rat suspended_substitution_point(long k);  // -(2k-1)/(2k)
Rat suspended_substitution_value(long k);  // value the displayed numerator takes there

// Three-variable extension of the suspension family with an extra integer
// parameter n >= 0, defined for k >= n + 4; n = 0 reduces to the suspension.
DisplayForm threevar_display(long n, long k);
Rat threevar_substitution_point(long n, long k);  // -(2k-2n-1)/(2k)
Rat threevar_substitution_value(long n, long k);

}  // namespace family

}  // namespace germzeta
