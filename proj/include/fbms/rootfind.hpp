#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "fbms/errors.hpp"

namespace fbms {

/// Bracketing scalar root finder: bisection to a bracket of min(tol, 1e-13),
/// then three Newton polish steps with a central-difference derivative.
/// Deterministic; requires f(lo) f(hi) < 0.
template <class F>
double find_root(F&& f, double lo, double hi, double tol) {
  if (!(tol > 0.0) || !(lo < hi)) {
    throw BracketError("find_root: need lo < hi and tol > 0");
  }
  double flo = f(lo);
  double fhi = f(hi);
  if (!std::isfinite(flo) || !std::isfinite(fhi)) {
    throw NumericError("find_root: non-finite endpoint value");
  }
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw BracketError("find_root: no sign change on [" + std::to_string(lo) +
                       ", " + std::to_string(hi) + "]");
  }

  const double lo0 = lo;
  const double hi0 = hi;
  const double width_goal = std::min(tol, 1e-13);
  while (hi - lo > width_goal) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket at floating-point resolution
    const double fm = f(mid);
    if (!std::isfinite(fm)) {
      throw NumericError("find_root: non-finite value at x=" + std::to_string(mid));
    }
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }

  double x = 0.5 * (lo + hi);
  double fx = f(x);
  for (int step = 0; step < 3; ++step) {
    const double h = 1e-7 * std::max(1.0, std::abs(x));
    const double df = (f(x + h) - f(x - h)) / (2.0 * h);
    if (!std::isfinite(df) || df == 0.0) break;
    const double xn = x - fx / df;
    if (!std::isfinite(xn) || xn < lo0 || xn > hi0) break;
    const double fn = f(xn);
    if (!std::isfinite(fn) || std::abs(fn) > std::abs(fx)) break;
    x = xn;
    fx = fn;
  }
  return x;
}

}  // namespace fbms
