#include "fbms/herisson.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fbms/bridge.hpp"
#include "test_support.hpp"

using fbms::AxisymmetricHarmonic;
using fbms::ConeDomain;
using fbms::HerissonSample;
using fbms::Vec3;

namespace {

// g = 1: v = |x|, gradient image is the unit sphere (not harmonic — sanity
// input for the radii/trace identity with nonzero values on both sides).
struct RadialProfile {
  double g(double) const { return 1.0; }
  double g_prime(double) const { return 0.0; }
  double g_second(double) const { return 0.0; }
};

// non-harmonic control
struct Cos2Profile {
  double g(double t) const { return std::cos(2.0 * t); }
  double g_prime(double t) const { return -2.0 * std::sin(2.0 * t); }
  double g_second(double t) const { return -4.0 * std::cos(2.0 * t); }
};

}  // namespace

TEST(GradientMap, LinearFunctionIsConstant) {
  const AxisymmetricHarmonic fn(1.0, 0.0);  // v = z
  for (double theta : {0.3, 1.2, 2.8}) {
    for (double phi : {0.0, 2.0}) {
      EXPECT_NEAR(
          fbms::distance(fbms::gradient_map(fn, theta, phi), {0.0, 0.0, 1.0}), 0.0,
          1e-14);
    }
  }
}

// |grad v|^2 = g^2 + g'^2, against the ambient finite-difference gradient.
TEST(GradientMap, MatchesAmbientGradient) {
  const AxisymmetricHarmonic fn(0.6, 1.1);
  auto v = [&fn](const Vec3& p) {
    const double r = p.norm();
    return r * fn.g(std::acos(p.z / r));
  };
  for (int i = 1; i < 10; ++i) {
    const double theta = 0.3 + (std::numbers::pi - 0.6) * i / 10;
    for (int j = 0; j < 10; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / 10;
      const Vec3 x = fbms::spherical_unit(theta, phi);
      const Vec3 closed = fbms::gradient_map(fn, theta, phi);
      EXPECT_NEAR(closed.norm2(),
                  std::pow(fn.g(theta), 2) + std::pow(fn.g_prime(theta), 2), 1e-12);
      EXPECT_NEAR(fbms::distance(closed, fbms::test::fd_gradient3(v, x, 1e-5)), 0.0,
                  1e-6);
    }
  }
}

TEST(HerissonSurface, RadialProfileGivesUnitSphere) {
  const RadialProfile p;
  const auto samples = fbms::herisson_surface(p, ConeDomain(0.4, 2.6), 12, 12);
  const auto rep = fbms::verify_gauss_inversion(samples);
  EXPECT_EQ(rep.degenerate_count, 0);
  EXPECT_LE(rep.max_normal_dev, 1e-6);
  EXPECT_LE(rep.max_radii_mismatch, 1e-4);
  for (const auto& s : samples) {
    EXPECT_NEAR(s.y.norm(), 1.0, 1e-12);      // image on the unit sphere
    EXPECT_NEAR(s.hess_trace, 2.0, 1e-12);    // trace of Hess |x| at r = 1
    EXPECT_NEAR(std::abs(s.radii_sum), 2.0, 1e-4);
  }
}

TEST(HerissonSurface, DegeneratePointImageFlagged) {
  const AxisymmetricHarmonic fn(1.0, 0.0);  // v = z: image collapses to a point
  const auto samples = fbms::herisson_surface(fn, ConeDomain(0.4, 2.6), 6, 6);
  for (const auto& s : samples) EXPECT_FALSE(s.regular);
  EXPECT_THROW(fbms::verify_gauss_inversion(samples), fbms::InsufficientDataError);
  EXPECT_THROW(fbms::verify_image_minimality(samples), fbms::InsufficientDataError);
}

TEST(VerifyGaussInversion, DoubleConeSolution) {
  const auto sol = fbms::solve_one_phase(fbms::OnePhaseKind::kDoubleCone);
  const AxisymmetricHarmonic scaled(sol.c * sol.fn.A, sol.c * sol.fn.B);
  const auto samples = fbms::herisson_surface(scaled, sol.domain, 24, 24);
  const auto rep = fbms::verify_gauss_inversion(samples);
  EXPECT_LE(rep.max_normal_dev, 1e-6);
  EXPECT_LE(rep.max_radii_mismatch, 1e-4);
  EXPECT_GT(rep.regular_count, 0);
}

TEST(VerifyImageMinimality, HarmonicInputsAreMinimal) {
  // generic harmonic input on a band
  const AxisymmetricHarmonic fn(1.0, 0.5);
  const auto samples =
      fbms::herisson_surface(fn, ConeDomain(0.8, std::numbers::pi - 0.8), 20, 20);
  const auto rep = fbms::verify_image_minimality(samples);
  EXPECT_LE(rep.max_mean_curvature, 1e-5);
}

TEST(VerifyImageMinimality, NonHarmonicControlFails) {
  const Cos2Profile p;
  const auto samples =
      fbms::herisson_surface(p, ConeDomain(0.8, std::numbers::pi - 0.8), 20, 20);
  const auto rep = fbms::verify_image_minimality(samples);
  EXPECT_GT(rep.max_mean_curvature, 0.01);
}

// Boundary normals of the image equal the cone boundary directions.
TEST(Duality, BoundaryNormalsMatchConeDirections) {
  const auto sol = fbms::solve_one_phase(fbms::OnePhaseKind::kDoubleCone);
  const AxisymmetricHarmonic scaled(sol.c * sol.fn.A, sol.c * sol.fn.B);
  auto chart = [&scaled](double th, double ph) {
    return fbms::gradient_map(scaled, th, ph);
  };
  const double theta1 = sol.domain.theta_lo;
  double spread = 0.0;
  int sign = 0;
  for (int j = 0; j < 32; ++j) {
    const double phi = 2.0 * std::numbers::pi * j / 32;
    const auto rec = fbms::curvatures(fbms::surface_jet(chart, theta1, phi, 1e-5));
    const Vec3 x = fbms::spherical_unit(theta1, phi);
    if (sign == 0) sign = rec.N.dot(x) > 0 ? 1 : -1;
    // |N - s x| bounds the angle and is stable for tiny deviations
    spread = std::max(spread, fbms::distance(rec.N, static_cast<double>(sign) * x));
  }
  EXPECT_LE(spread, 1e-8);
}

// The gradient image of the double-cone solution is the critical catenoid.
TEST(Bridge, HausdorffDistanceTiny) {
  EXPECT_LE(fbms::herisson_catenoid_hausdorff(32, 32), 1e-4);
}

TEST(Bridge, RequiresEvenAzimuthGrid) {
  const auto sol = fbms::solve_one_phase(fbms::OnePhaseKind::kDoubleCone);
  const auto cat = fbms::solve_critical();
  EXPECT_THROW(fbms::matched_catenoid_cloud(sol, cat, 8, 9), std::invalid_argument);
}

TEST(Hausdorff, SimpleClouds) {
  const std::vector<Vec3> a = {{0, 0, 0}, {1, 0, 0}};
  const std::vector<Vec3> b = {{0, 0, 0.5}, {1, 0, 0}};
  EXPECT_NEAR(fbms::hausdorff_distance(a, b), 0.5, 1e-15);
  EXPECT_THROW(fbms::hausdorff_distance({}, b), std::invalid_argument);
}

TEST(ConeDomain, Validation) {
  EXPECT_THROW(fbms::ConeDomain(1.5, 1.0), std::invalid_argument);
  EXPECT_THROW(fbms::ConeDomain(-0.1, 1.0), std::invalid_argument);
  EXPECT_THROW(fbms::ConeDomain(0.5, 4.0), std::invalid_argument);
}

TEST(HerissonSurface, RejectsEmptyGrid) {
  const RadialProfile p;
  EXPECT_THROW(fbms::herisson_surface(p, ConeDomain(0.4, 2.6), 0, 4),
               std::invalid_argument);
}

// The inversion and radii-vs-trace identities hold for any homogeneous
// degree-1 profile, harmonic or not; the non-harmonic control has a nonzero
// Hessian trace, so this exercises the signed comparison away from zero.
TEST(VerifyGaussInversion, NonHarmonicProfileStillInverts) {
  const Cos2Profile p;
  const auto samples =
      fbms::herisson_surface(p, ConeDomain(0.8, std::numbers::pi - 0.8), 20, 20);
  const auto rep = fbms::verify_gauss_inversion(samples);
  EXPECT_LE(rep.max_normal_dev, 1e-6);
  EXPECT_LE(rep.max_radii_mismatch, 1e-4);
  // trace really is nonzero somewhere on this band
  double max_trace = 0.0;
  for (const auto& s : samples) {
    max_trace = std::max(max_trace, std::abs(s.hess_trace));
  }
  EXPECT_GT(max_trace, 1.0);
}
