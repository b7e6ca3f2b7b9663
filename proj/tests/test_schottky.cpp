#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fbms/catenoid.hpp"
#include "fbms/weierstrass.hpp"

using fbms::Complex;
using fbms::LaurentPoly;
using fbms::WeierstrassData;

namespace {

WeierstrassData catenoid_data(double c = 1.0, double rho = 0.3) {
  return WeierstrassData(LaurentPoly{{-2, Complex{c, 0.0}}},
                         LaurentPoly{{1, Complex{1.0, 0.0}}}, rho);
}

}  // namespace

TEST(Schottky, IdentityOnData) {
  const WeierstrassData d = catenoid_data();
  const WeierstrassData e = fbms::apply_schottky(d, Complex{1.0, 0.0}, +1);
  EXPECT_TRUE(e.mu() == d.mu());
  EXPECT_TRUE(e.nu() == d.nu());
  EXPECT_EQ(e.rho(), d.rho());
  EXPECT_EQ(e.z_ref(), d.z_ref());
}

TEST(Schottky, RotationTransportsConformalFactor) {
  const WeierstrassData d = catenoid_data(0.8);
  const Complex lambda = std::polar(1.0, std::numbers::pi / 3.0);
  const WeierstrassData e = fbms::apply_schottky(d, lambda, +1);
  for (int i = 0; i < 6; ++i) {
    const Complex w = std::polar(0.35 + 0.1 * i, 0.7 * i);
    // Lambda~(w) = Lambda(lambda w): |f'| = 1 for a rotation
    EXPECT_NEAR(fbms::metric_lambda(e, w), fbms::metric_lambda(d, lambda * w),
                1e-13 * fbms::metric_lambda(d, lambda * w));
    // the immersion point is transported exactly
    EXPECT_NEAR(fbms::distance(fbms::surface_point(e, w),
                               fbms::surface_point(d, lambda * w)),
                0.0, 1e-11);
  }
}

TEST(Schottky, InversionSwapsBoundaries) {
  const fbms::CatenoidParams cat = fbms::solve_critical();
  const WeierstrassData d = fbms::to_weierstrass(cat);
  const double rho = d.rho();
  const WeierstrassData e = fbms::apply_schottky(d, Complex{rho, 0.0}, -1);

  // K distribution on the outer boundary of e equals the inner of d
  for (int k = 0; k < 32; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / 32;
    const Complex w = std::polar(1.0, theta);
    const Complex z = Complex{rho, 0.0} / w;  // image on |z| = rho
    EXPECT_NEAR(fbms::gauss_curvature(e, w), fbms::gauss_curvature(d, z), 1e-10);
  }
  // image surfaces congruent: the immersion values agree pointwise
  for (int i = 0; i < 5; ++i) {
    const Complex w = std::polar(rho + (1.0 - rho) * (i + 0.5) / 5, 0.6 * i);
    EXPECT_NEAR(fbms::distance(fbms::surface_point(e, w),
                               fbms::surface_point(d, Complex{rho, 0.0} / w)),
                0.0, 1e-10);
  }
}

TEST(Schottky, MetricTransformsWithJacobianUnderInversion) {
  const WeierstrassData d = catenoid_data(0.7, 0.4);
  const Complex lambda{0.4, 0.0};
  const WeierstrassData e = fbms::apply_schottky(d, lambda, -1);
  for (int i = 0; i < 6; ++i) {
    const Complex w = std::polar(0.45 + 0.09 * i, 1.1 * i);
    const double jac2 = std::norm(lambda / (w * w));  // |f'(w)|^2
    EXPECT_NEAR(fbms::metric_lambda(e, w),
                fbms::metric_lambda(d, lambda / w) * jac2,
                1e-12 * fbms::metric_lambda(e, w));
  }
}

TEST(Schottky, RejectsInvalidTransforms) {
  const WeierstrassData d = catenoid_data();
  EXPECT_THROW(fbms::apply_schottky(d, Complex{0.5, 0.0}, +1),
               fbms::RepresentationError);
  EXPECT_THROW(fbms::apply_schottky(d, Complex{1.0, 0.0}, -1),
               fbms::RepresentationError);
  EXPECT_THROW(fbms::apply_schottky(d, Complex{1.0, 0.0}, 2),
               fbms::RepresentationError);
}

// Group laws of the annulus automorphisms acting on data.
TEST(Schottky, CompositionLaws) {
  const WeierstrassData d = catenoid_data(0.8, 0.35);
  const Complex l1 = std::polar(1.0, 0.9);
  const Complex l2 = std::polar(1.0, -2.1);
  // rotation composition: (z -> l1 z) after (z -> l2 z) = z -> (l1 l2) z
  const WeierstrassData a =
      fbms::apply_schottky(fbms::apply_schottky(d, l1, +1), l2, +1);
  const WeierstrassData b = fbms::apply_schottky(d, l1 * l2, +1);
  for (int k = 0; k < 8; ++k) {
    const Complex w = std::polar(0.4 + 0.07 * k, 0.5 * k);
    EXPECT_NEAR(std::abs(a.mu()(w) - b.mu()(w)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(a.nu()(w) - b.nu()(w)), 0.0, 1e-12);
  }
  // involution: inverting twice with the same lambda is the identity
  const Complex li = std::polar(d.rho(), 0.7);
  const WeierstrassData twice =
      fbms::apply_schottky(fbms::apply_schottky(d, li, -1), li, -1);
  for (int k = 0; k < 8; ++k) {
    const Complex w = std::polar(0.4 + 0.07 * k, 0.5 * k);
    EXPECT_NEAR(std::abs(twice.mu()(w) - d.mu()(w)), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(twice.nu()(w) - d.nu()(w)), 0.0, 1e-12);
    EXPECT_NEAR(fbms::distance(fbms::surface_point(twice, w),
                               fbms::surface_point(d, w)),
                0.0, 1e-11);
  }
}
