#pragma once

#include <cmath>
#include <utility>

#include "fbms/rootfind.hpp"
#include "fbms/vec3.hpp"
#include "fbms/weierstrass.hpp"

namespace fbms {

/// Catenoid with neck radius a and profile parameter s in [-alpha, alpha]:
/// (a cosh s cos theta, a cosh s sin theta, a s).  Axis along z, neck in the
/// plane z = 0.
struct CatenoidParams {
  double a = 1.0;
  double alpha = 1.0;
};

inline Vec3 catenoid_point(const CatenoidParams& c, double s, double theta) {
  const double ch = std::cosh(s);
  return {c.a * ch * std::cos(theta), c.a * ch * std::sin(theta), c.a * s};
}

/// N = (cos theta, sin theta, -sinh s) / cosh s; unit by construction.
inline Vec3 catenoid_normal(const CatenoidParams&, double s, double theta) {
  const double ch = std::cosh(s);
  return {std::cos(theta) / ch, std::sin(theta) / ch, -std::sinh(s) / ch};
}

/// Closed-form Gaussian curvature -1 / (a^2 cosh^4 s); H is identically 0.
inline double catenoid_gauss_curvature(const CatenoidParams& c, double s) {
  const double ch = std::cosh(s);
  return -1.0 / (c.a * c.a * ch * ch * ch * ch);
}

/// Free-boundary defects of the boundary circle at s = s0:
/// (|p|^2 - 1, cosh-scaled p . N) = (a^2 cosh^2 s0 + a^2 s0^2 - 1,
///                                   a (cosh s0 - s0 sinh s0)).
/// Both vanish exactly at the critical catenoid.
inline std::pair<double, double> critical_residual(double a, double s0) {
  const double ch = std::cosh(s0);
  const double sh = std::sinh(s0);
  return {a * a * (ch * ch + s0 * s0) - 1.0, a * (ch - s0 * sh)};
}

/// The catenoid meeting the unit sphere orthogonally, found from the
/// geometric conditions |p| = 1 and p . N = 0 on the boundary circle:
/// alpha solves s tanh s = 1, then a = sqrt(alpha^2 - 1) / alpha^2.
inline CatenoidParams solve_critical() {
  const double alpha = find_root(
      [](double s) { return critical_residual(1.0, s).second; }, 1.0, 2.0, 1e-13);
  const double a = std::sqrt(alpha * alpha - 1.0) / (alpha * alpha);
  const auto [r1, r2] = critical_residual(a, alpha);
  if (std::abs(r1) > 1e-10 || std::abs(r2) > 1e-10) {
    throw NumericError("solve_critical: free-boundary residual exceeds 1e-10");
  }
  return {a, alpha};
}

/// Chart-to-annulus map used by to_weierstrass: (s, theta) -> e^{-s-alpha+i theta}.
/// s = alpha lands on the inner circle |w| = rho, s = -alpha on |w| = 1.
inline Complex catenoid_chart_to_annulus(const CatenoidParams& c, double s,
                                         double theta) {
  return std::exp(Complex{-s - c.alpha, theta});
}

/// Weierstrass data whose immersion reproduces catenoid_point through
/// catenoid_chart_to_annulus: mu = -a e^{-alpha} z^{-2}, nu = e^{alpha} z,
/// rho = e^{-2 alpha}, basepoint on the outer circle.
inline WeierstrassData to_weierstrass(const CatenoidParams& c) {
  const LaurentPoly mu = LaurentPoly::monomial(-2, -c.a * std::exp(-c.alpha));
  const LaurentPoly nu = LaurentPoly::monomial(1, std::exp(c.alpha));
  const double rho = std::exp(-2.0 * c.alpha);
  const Vec3 u0 = catenoid_point(c, -c.alpha, 0.0);
  return WeierstrassData(mu, nu, rho, u0, Complex{1.0, 0.0});
}

/// The normals along either boundary circle sweep a circular cone about the
/// axis with half-angle arccos(tanh alpha); returns the full aperture.
inline double normal_cone_aperture(const CatenoidParams& c) {
  return 2.0 * std::acos(std::tanh(c.alpha));
}

}  // namespace fbms
