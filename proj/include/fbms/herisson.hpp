#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "fbms/errors.hpp"
#include "fbms/legendre.hpp"
#include "fbms/rootfind.hpp"
#include "fbms/surface_jet.hpp"
#include "fbms/vec3.hpp"

namespace fbms {

/// Spherical profile of a homogeneous degree-1 function v(x) = |x| g(theta).
template <class P>
concept SphericalProfile = requires(const P& p, double t) {
  { p.g(t) } -> std::convertible_to<double>;
  { p.g_prime(t) } -> std::convertible_to<double>;
  { p.g_second(t) } -> std::convertible_to<double>;
};

/// g(theta) = A P1(cos theta) + B Q1(cos theta), the axisymmetric solutions of
/// the spherical eigenvalue problem Delta_S2 g = -2 g.  The generated
/// v = |x| g(theta) is harmonic on the cone where g is defined.
struct AxisymmetricHarmonic {
  double A = 0.0;
  double B = 0.0;

  AxisymmetricHarmonic(double A_in, double B_in) : A(A_in), B(B_in) {
    if (A == 0.0 && B == 0.0) {
      throw std::invalid_argument("AxisymmetricHarmonic: (A, B) must be nonzero");
    }
  }

  double g(double theta) const {
    const double x = std::cos(theta);
    if (B == 0.0) return A * x;
    return A * x + B * legendre_q1(x);
  }

  double g_prime(double theta) const {
    const double st = std::sin(theta);
    const double x = std::cos(theta);
    if (B == 0.0) return -A * st;
    return -A * st - B * st * legendre_q1_prime(x);
  }

  double g_second(double theta) const {
    const double st = std::sin(theta);
    const double x = std::cos(theta);
    if (B == 0.0) return -A * x;
    return -A * x - B * (x * legendre_q1_prime(x) - st * st * legendre_q1_second(x));
  }
};

/// Polar-angle band theta_lo < theta < theta_hi on the sphere; the cone over
/// it is the solution domain.  A cap when theta_lo = 0.
struct ConeDomain {
  double theta_lo = 0.0;
  double theta_hi = std::numbers::pi;

  ConeDomain(double lo, double hi) : theta_lo(lo), theta_hi(hi) {
    if (!(lo >= 0.0 && hi <= std::numbers::pi && lo < hi)) {
      throw std::invalid_argument("ConeDomain: need 0 <= theta_lo < theta_hi <= pi");
    }
  }
};

inline Vec3 spherical_unit(double theta, double phi) {
  const double st = std::sin(theta);
  return {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

inline Vec3 spherical_theta_unit(double theta, double phi) {
  const double ct = std::cos(theta);
  return {ct * std::cos(phi), ct * std::sin(phi), -std::sin(theta)};
}

/// grad v on the unit sphere (hence, by degree-0 homogeneity, on the whole
/// ray): g(theta) r^ + g'(theta) theta^.
template <SphericalProfile P>
Vec3 gradient_map(const P& p, double theta, double phi) {
  return p.g(theta) * spherical_unit(theta, phi) +
         p.g_prime(theta) * spherical_theta_unit(theta, phi);
}

/// Trace of Hess(|x| g) at a unit vector with polar angle theta:
/// 2g + g'' + cot(theta) g' (the Laplacian of v restricted to the sphere).
template <SphericalProfile P>
double hessian_trace(const P& p, double theta) {
  return 2.0 * p.g(theta) + p.g_second(theta) +
         p.g_prime(theta) * std::cos(theta) / std::sin(theta);
}

/// Nonradial Hessian eigenvalues of v = |x| g on the unit sphere, in the
/// (theta^, phi^) frame: {g + g'', g + cot(theta) g'}.  The radial direction
/// is annihilated (degree-0 homogeneity of grad v).
template <SphericalProfile P>
std::pair<double, double> hessian_nonradial_eigenvalues(const P& p, double theta) {
  return {p.g(theta) + p.g_second(theta),
          p.g(theta) + p.g_prime(theta) * std::cos(theta) / std::sin(theta)};
}

/// One sample of the gradient image surface.
struct HerissonSample {
  Vec3 x;                     // source point on the unit sphere
  Vec3 y;                     // grad v(x)
  Vec3 N_img;                 // image normal from the (theta, phi) chart
  double kappa1 = 0.0;        // principal curvatures w.r.t. N_img
  double kappa2 = 0.0;
  double radii_sum = 0.0;     // 1/kappa1 + 1/kappa2
  double hess_trace = 0.0;    // closed form, equals the curvature-radii sum
  double mean_curvature = 0.0;
  bool regular = false;
};

/// Sample the image surface of grad v over an (n_theta x n_phi) grid interior
/// to the band.  Rank-degenerate samples (tiny area element or a principal
/// curvature below 1e-8) are flagged regular = false and carry no curvature
/// data.
template <SphericalProfile P>
std::vector<HerissonSample> herisson_surface(const P& p, const ConeDomain& dom,
                                             int n_theta, int n_phi,
                                             double h = 1e-4) {
  if (n_theta < 1 || n_phi < 1) {
    throw std::invalid_argument("herisson_surface: grid must be nonempty");
  }
  auto chart = [&p](double th, double ph) { return gradient_map(p, th, ph); };
  std::vector<HerissonSample> out;
  out.reserve(static_cast<std::size_t>(n_theta) * n_phi);
  for (int i = 0; i < n_theta; ++i) {
    const double theta =
        dom.theta_lo + (dom.theta_hi - dom.theta_lo) * (i + 0.5) / n_theta;
    for (int j = 0; j < n_phi; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / n_phi;
      HerissonSample smp;
      smp.x = spherical_unit(theta, phi);
      smp.y = gradient_map(p, theta, phi);
      smp.hess_trace = hessian_trace(p, theta);
      try {
        const CurvatureRecord rec = curvatures(surface_jet(chart, theta, phi, h));
        smp.N_img = rec.N;
        smp.kappa1 = rec.kappa1;
        smp.kappa2 = rec.kappa2;
        smp.mean_curvature = rec.H;
        const double kmin = std::min(std::abs(rec.kappa1), std::abs(rec.kappa2));
        if (kmin >= 1e-8) {
          smp.radii_sum = 1.0 / rec.kappa1 + 1.0 / rec.kappa2;
          smp.regular = true;
        }
      } catch (const DegenerateError&) {
        // zero-rank sample; left flagged
      }
      out.push_back(smp);
    }
  }
  return out;
}

/// Gauss-map inversion and curvature-radii checks at the regular samples.
/// The normal sign s (N_img = s x) is resolved once per surface; the radii
/// comparison uses hess_trace = -s (1/k1 + 1/k2) (see CurvatureRecord's
/// orientation convention) with the mismatch measured relative to the larger
/// curvature radius.
struct GaussInversionReport {
  double max_normal_dev = 0.0;
  double max_radii_mismatch = 0.0;
  int sign = +1;
  int regular_count = 0;
  int degenerate_count = 0;
};

inline GaussInversionReport verify_gauss_inversion(const std::vector<HerissonSample>& samples) {
  GaussInversionReport rep;
  bool sign_fixed = false;
  for (const auto& s : samples) {
    if (!s.regular) {
      ++rep.degenerate_count;
      continue;
    }
    if (!sign_fixed) {
      rep.sign = (s.N_img - s.x).norm() <= (s.N_img + s.x).norm() ? +1 : -1;
      sign_fixed = true;
    }
    ++rep.regular_count;
    rep.max_normal_dev =
        std::max(rep.max_normal_dev, (s.N_img - static_cast<double>(rep.sign) * s.x).norm());
    const double signed_radii = -static_cast<double>(rep.sign) * s.radii_sum;
    const double denom =
        std::max(std::abs(1.0 / s.kappa1), std::abs(1.0 / s.kappa2));
    rep.max_radii_mismatch = std::max(
        rep.max_radii_mismatch, std::abs(signed_radii - s.hess_trace) / denom);
  }
  if (rep.regular_count == 0) {
    throw InsufficientDataError("verify_gauss_inversion: no regular samples");
  }
  return rep;
}

/// Minimality of the image surface: max |H| over regular samples.
struct MinimalityReport {
  double max_mean_curvature = 0.0;
  int regular_count = 0;
  int degenerate_count = 0;
};

inline MinimalityReport verify_image_minimality(const std::vector<HerissonSample>& samples) {
  MinimalityReport rep;
  for (const auto& s : samples) {
    if (!s.regular) {
      ++rep.degenerate_count;
      continue;
    }
    ++rep.regular_count;
    rep.max_mean_curvature = std::max(rep.max_mean_curvature, std::abs(s.mean_curvature));
  }
  if (rep.regular_count == 0) {
    throw InsufficientDataError("verify_image_minimality: no regular samples");
  }
  return rep;
}

/// A solved overdetermined cone problem: v = c |x| g(theta) on the cone over
/// the band.  c normalizes the boundary gradient.
struct OnePhaseSolution {
  ConeDomain domain;
  AxisymmetricHarmonic fn;
  double c = 1.0;

  double scaled_g(double theta) const { return c * fn.g(theta); }
  double scaled_g_prime(double theta) const { return c * fn.g_prime(theta); }
  double v(const Vec3& x) const {
    const double r = x.norm();
    return c * r * fn.g(std::acos(std::clamp(x.z / r, -1.0, 1.0)));
  }
  Vec3 grad(double theta, double phi) const {
    return c * gradient_map(fn, theta, phi);
  }
  double grad_norm(double theta) const {
    return c * std::hypot(fn.g(theta), fn.g_prime(theta));
  }
};

enum class OnePhaseKind { kHalfspace, kDoubleCone };

/// Positive root of x artanh(x) = 1 (the Q1 root); equals tanh of the root of
/// s tanh(s) = 1.
inline double q1_positive_root() {
  return find_root([](double x) { return x * std::atanh(x) - 1.0; }, 0.5, 0.99,
                   1e-13);
}

/// Closed-form solutions of the homogeneous one-phase problem
/// (v harmonic and degree 1, v = 0 on the cone boundary, |grad v| = 1 there):
/// the half-space v = <x,e>^+, and the symmetric double cone with
/// cos(theta_1) the Q1 root.
inline OnePhaseSolution solve_one_phase(OnePhaseKind kind) {
  if (kind == OnePhaseKind::kHalfspace) {
    return {ConeDomain(0.0, std::numbers::pi / 2.0), AxisymmetricHarmonic(1.0, 0.0),
            1.0};
  }
  const double x1 = q1_positive_root();
  const double theta1 = std::acos(x1);
  const AxisymmetricHarmonic fn(0.0, 1.0);
  const double c = 1.0 / std::hypot(fn.g(theta1), fn.g_prime(theta1));
  return {ConeDomain(theta1, std::numbers::pi - theta1), fn, c};
}

/// Regular cap solution of the fixed-trace variant (v = alpha |x| on the cone
/// boundary, |grad v| = 1 there): v = |x| cos(theta) on the cap
/// theta <= arccos(alpha).
inline OnePhaseSolution solve_dirichlet_cap(double alpha_bc) {
  if (!(std::abs(alpha_bc) < 1.0)) {
    throw std::domain_error("solve_dirichlet_cap: alpha must lie in (-1, 1)");
  }
  return {ConeDomain(0.0, std::acos(alpha_bc)), AxisymmetricHarmonic(1.0, 0.0), 1.0};
}

/// Overdetermined spectral data of the geodesic cap of polar radius theta0 on
/// the curvature-kappa sphere, for v = cos(polar angle):
/// lambda = -2 kappa, v = cos(theta0) on the boundary, |grad v| = sqrt(kappa)
/// sin(theta0) there.  pde_residual is the finite-difference
/// Laplace-Beltrami defect max |Delta v - lambda v| over the cap;
/// grad_spread is the boundary gradient-magnitude spread.
struct SpectralDiskResult {
  double lambda = 0.0;
  double alpha_bv = 0.0;
  double beta_bv = 0.0;
  double pde_residual = 0.0;
  double grad_spread = 0.0;
};

inline SpectralDiskResult spectral_disk_check(double theta0, double kappa,
                                              int grid_n = 64) {
  if (!(theta0 > 0.0 && theta0 < std::numbers::pi && kappa > 0.0)) {
    throw std::domain_error("spectral_disk_check: need 0 < theta0 < pi, kappa > 0");
  }
  SpectralDiskResult out;
  out.lambda = -2.0 * kappa;
  out.alpha_bv = std::cos(theta0);
  out.beta_bv = std::sqrt(kappa) * std::sin(theta0);

  // Intrinsic Laplacian on the radius-1/sqrt(kappa) sphere in the polar
  // chart: Delta v = kappa (v'' + cot(theta) v'); FD in theta, away from the
  // pole where cot blows up the stencil error.
  const double h = 1e-4;
  auto v = [](double th) { return std::cos(th); };
  const double lo = std::min(0.05, 0.5 * theta0);
  for (int i = 0; i <= grid_n; ++i) {
    const double th = lo + (theta0 - lo) * i / grid_n;
    const double d1 = (v(th + h) - v(th - h)) / (2.0 * h);
    const double d2 = (v(th + h) - 2.0 * v(th) + v(th - h)) / (h * h);
    const double lap = kappa * (d2 + d1 * std::cos(th) / std::sin(th));
    out.pde_residual = std::max(out.pde_residual, std::abs(lap - out.lambda * v(th)));
  }

  // |grad v| along the boundary circle, from finite differences of the
  // pulled-back chart value in both polar coordinates.  grad_spread is the
  // maximal deviation from beta_bv, which bounds the spread.
  auto vc = [](double th, double ph) { return spherical_unit(th, ph).z; };
  for (int j = 0; j < grid_n; ++j) {
    const double ph = 2.0 * std::numbers::pi * j / grid_n;
    const double vt = (vc(theta0 + h, ph) - vc(theta0 - h, ph)) / (2.0 * h);
    const double vp = (vc(theta0, ph + h) - vc(theta0, ph - h)) / (2.0 * h);
    const double gn =
        std::sqrt(kappa) * std::hypot(vt, vp / std::sin(theta0));
    out.grad_spread = std::max(out.grad_spread, std::abs(gn - out.beta_bv));
  }
  return out;
}

}  // namespace fbms
