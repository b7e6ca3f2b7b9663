#include <gtest/gtest.h>

#include <cmath>

#include "fbms/catenoid.hpp"
#include "fbms/weierstrass.hpp"

using fbms::Complex;
using fbms::LaurentPoly;
using fbms::Vec3;
using fbms::WeierstrassData;

TEST(FreeBoundaryReport, CriticalCatenoidPasses) {
  const WeierstrassData d = fbms::to_weierstrass(fbms::solve_critical());
  const fbms::FreeBoundaryResiduals res = fbms::free_boundary_report(d, 32);
  EXPECT_LE(res.sphere, 1e-8);
  EXPECT_LE(res.orthogonality, 1e-8);
  EXPECT_LE(res.hopf_imag, 1e-8);
  EXPECT_LE(res.lambda_theta, 1e-8);
}

TEST(FreeBoundaryReport, EquatorialPlaneDiskFlagsInnerBoundary) {
  // u(z) = (Re z, -Im z, 0): outer boundary is the equator, inner boundary a
  // circle of radius rho strictly inside the ball.
  const double rho = 0.3;
  const WeierstrassData d(LaurentPoly{{0, Complex{2.0, 0.0}}}, LaurentPoly{}, rho,
                          Vec3{1.0, 0.0, 0.0}, Complex{1.0, 0.0});
  const fbms::FreeBoundaryResiduals res = fbms::free_boundary_report(d, 32);
  EXPECT_NEAR(res.sphere, 1.0 - rho, 1e-10);
  EXPECT_GT(res.max(), 0.1);
}

TEST(FreeBoundaryReport, PerturbedDataHasOrthogonalityDefect) {
  // nu = z + 0.1 z^2 breaks the free-boundary property
  const WeierstrassData d(
      LaurentPoly{{-2, Complex{1.0, 0.0}}},
      LaurentPoly{{1, Complex{1.0, 0.0}}, {2, Complex{0.1, 0.0}}}, 0.3);
  const fbms::FreeBoundaryResiduals res = fbms::free_boundary_report(d, 32);
  EXPECT_GT(res.orthogonality, 1e-4);
}

TEST(FreeBoundaryReport, RejectsTinyGrid) {
  const WeierstrassData d = fbms::to_weierstrass(fbms::solve_critical());
  EXPECT_THROW(fbms::free_boundary_report(d, 4), std::invalid_argument);
}
