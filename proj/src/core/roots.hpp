#pragma once

// Bracketing root finding.  Bisection is plenty here: every root we chase is
// simple, cheap to evaluate, and needed to ~1e-12 in the abscissa.

#include <cmath>
#include <stdexcept>

#include "core/errors.hpp"

namespace hrsurf {

template <class F>
double bisect(F&& f, double lo, double hi, double xtol = 1e-12, int max_iter = 240) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw std::invalid_argument("bisect: endpoints do not bracket a sign change");
  for (int i = 0; i < max_iter; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= xtol || mid == lo || mid == hi) return mid;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Doubles `hi` away from `lo` until f changes sign.  `limit` guards against
// runaway growth (and against overflow in the integrands upstream).
template <class F>
double expand_upper(F&& f, double lo, double hi0, double limit) {
  const double flo = f(lo);
  double hi = hi0;
  while (hi <= limit) {
    if ((f(hi) > 0.0) != (flo > 0.0)) return hi;
    hi *= 2.0;
  }
  throw NumericError("expand_upper: no sign change before the search limit");
}

}  // namespace hrsurf
