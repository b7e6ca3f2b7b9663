#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "fbms/errors.hpp"
#include "fbms/laurent.hpp"
#include "fbms/quadrature.hpp"
#include "fbms/surface_jet.hpp"
#include "fbms/vec3.hpp"

namespace fbms {

namespace detail {

/// Three Laurent polynomials evaluated together with shared powers of z.
class TriplePoly {
 public:
  TriplePoly() = default;
  TriplePoly(const LaurentPoly& a, const LaurentPoly& b, const LaurentPoly& c) {
    std::map<int, CVec3> merged;
    for (const auto& [n, v] : a.coefficients()) merged[n].x = v;
    for (const auto& [n, v] : b.coefficients()) merged[n].y = v;
    for (const auto& [n, v] : c.coefficients()) merged[n].z = v;
    terms_.assign(merged.begin(), merged.end());
  }

  CVec3 eval(Complex z) const {
    if (terms_.empty()) return {};
    if (z == Complex{}) {
      if (terms_.front().first < 0) {
        throw PoleError("evaluation at z=0 with negative exponents");
      }
      for (const auto& [n, c] : terms_) {
        if (n == 0) return c;
      }
      return {};
    }
    int n = terms_.front().first;
    Complex zn = LaurentPoly::int_pow(z, n);
    CVec3 acc;
    for (const auto& [e, c] : terms_) {
      for (; n < e; ++n) zn *= z;
      acc += c * zn;
    }
    return acc;
  }

 private:
  std::vector<std::pair<int, CVec3>> terms_;
};

inline int winding_number(const LaurentPoly& p, double r, int samples = 1024) {
  double total = 0.0;
  Complex prev = p(std::polar(r, 0.0));
  for (int k = 1; k <= samples; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / samples;
    const Complex cur = p(std::polar(r, theta));
    total += std::arg(cur * std::conj(prev));
    prev = cur;
  }
  return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

}  // namespace detail

/// Weierstrass data (mu, nu) on the annulus rho < |z| < 1, plus the
/// integration basepoint z_ref and constant u0.  The generated immersion is
/// u(z) = u0 + Re int_{z_ref}^{z} Phi, with
/// Phi = (mu(1-nu^2)/2, i mu(1+nu^2)/2, mu nu).
///
/// Construction validates: mu not identically zero, no zeros of mu on either
/// boundary circle, and componentwise vanishing real period of Phi around the
/// annulus core (single-valued immersion).  Zeros of mu inside the annulus are
/// allowed but flagged.
class WeierstrassData {
 public:
  WeierstrassData(LaurentPoly mu, LaurentPoly nu, double rho, Vec3 u0 = {},
                  Complex z_ref = Complex{1.0, 0.0})
      : mu_(std::move(mu)), nu_(std::move(nu)), rho_(rho), u0_(u0), z_ref_(z_ref) {
    if (!(rho_ > 0.0 && rho_ < 1.0)) {
      throw std::invalid_argument("weierstrass: rho must lie in (0,1)");
    }
    const double rz = std::abs(z_ref_);
    if (rz < rho_ - 1e-9 || rz > 1.0 + 1e-9) {
      throw std::invalid_argument("weierstrass: |z_ref| must lie in [rho, 1]");
    }
    if (mu_.empty()) {
      throw std::invalid_argument("weierstrass: mu is identically zero");
    }

    const LaurentPoly mu_nu = mu_ * nu_;
    const LaurentPoly mu_nu2 = mu_nu * nu_;
    phi1_ = 0.5 * (mu_ - mu_nu2);
    phi2_ = Complex{0.0, 0.5} * (mu_ + mu_nu2);
    phi3_ = mu_nu;
    phi_ = detail::TriplePoly(phi1_, phi2_, phi3_);
    dphi_ = detail::TriplePoly(phi1_.derivative(), phi2_.derivative(),
                               phi3_.derivative());
    mu_prime_ = mu_.derivative();
    nu_prime_ = nu_.derivative();
    mu_nu_prime_ = mu_ * nu_prime_;

    // Branch points may not lie on the boundary circles.
    mu_boundary_scale_ = 0.0;
    for (double r : {rho_, 1.0}) {
      double mn = std::numeric_limits<double>::infinity();
      double mx = 0.0;
      for (int k = 0; k < 512; ++k) {
        const double m = std::abs(mu_(std::polar(r, 2.0 * std::numbers::pi * k / 512)));
        mn = std::min(mn, m);
        mx = std::max(mx, m);
      }
      mu_boundary_scale_ = std::max(mu_boundary_scale_, mx);
      if (!(mn > 1e-9 * mx)) {
        throw std::invalid_argument("weierstrass: mu vanishes on a boundary circle");
      }
    }

    // Real period around the core circle: Re(2 pi i c_{-1}) componentwise.
    double coeff_scale = 1.0;
    for (const LaurentPoly* p : {&phi1_, &phi2_, &phi3_}) {
      for (const auto& [n, c] : p->coefficients()) {
        coeff_scale = std::max(coeff_scale, std::abs(c));
      }
    }
    for (const LaurentPoly* p : {&phi1_, &phi2_, &phi3_}) {
      const double re_period = 2.0 * std::numbers::pi * std::abs(p->coeff(-1).imag());
      if (re_period > 1e-10 * coeff_scale) {
        throw std::invalid_argument(
            "weierstrass: nonvanishing real period; immersion is not single-valued");
      }
    }

    interior_branch_points_ =
        detail::winding_number(mu_, 1.0) - detail::winding_number(mu_, rho_);
  }

  const LaurentPoly& mu() const { return mu_; }
  const LaurentPoly& nu() const { return nu_; }
  double rho() const { return rho_; }
  Complex z_ref() const { return z_ref_; }
  const Vec3& u0() const { return u0_; }
  /// Number of zeros of mu inside the open annulus (degenerate immersion points).
  int interior_branch_points() const { return interior_branch_points_; }

  CVec3 phi(Complex z) const { return phi_.eval(z); }
  CVec3 phi_derivative(Complex z) const { return dphi_.eval(z); }

  Complex mu_at(Complex z) const { return mu_(z); }
  Complex nu_at(Complex z) const { return nu_(z); }
  Complex mu_prime_at(Complex z) const { return mu_prime_(z); }
  Complex nu_prime_at(Complex z) const { return nu_prime_(z); }
  Complex mu_nu_prime_at(Complex z) const { return mu_nu_prime_(z); }
  double mu_boundary_scale() const { return mu_boundary_scale_; }

 private:
  LaurentPoly mu_, nu_;
  double rho_;
  Vec3 u0_;
  Complex z_ref_;
  LaurentPoly phi1_, phi2_, phi3_, mu_prime_, nu_prime_, mu_nu_prime_;
  detail::TriplePoly phi_, dphi_;
  double mu_boundary_scale_ = 1.0;
  int interior_branch_points_ = 0;
};

namespace detail {

/// Canonical integration path: radial move from z_ref to the radius of z,
/// then a circular arc (always 16 chords, so the quadrature error varies
/// smoothly with z).
inline std::vector<Complex> canonical_path(Complex z_ref, Complex z) {
  constexpr int kArcChords = 16;
  const double r = std::abs(z);
  const double r_ref = std::abs(z_ref);
  const Complex z_mid = z_ref * (r / r_ref);
  const double phi0 = std::arg(z_ref);
  double dphi = std::arg(z) - phi0;
  if (dphi > std::numbers::pi) dphi -= 2.0 * std::numbers::pi;
  if (dphi <= -std::numbers::pi) dphi += 2.0 * std::numbers::pi;

  std::vector<Complex> path;
  path.reserve(kArcChords + 2);
  path.push_back(z_ref);
  path.push_back(z_mid);
  for (int k = 1; k < kArcChords; ++k) {
    path.push_back(std::polar(r, phi0 + dphi * k / kArcChords));
  }
  path.push_back(z);
  return path;
}

}  // namespace detail

/// u(z) = u0 + Re int Phi along the canonical path (radial, then arc).  Path
/// independence of the real part is guaranteed by the period validation.
inline Vec3 surface_point(const WeierstrassData& d, Complex z) {
  if (z == Complex{}) throw PoleError("surface_point: z = 0");
  const auto path = detail::canonical_path(d.z_ref(), z);
  auto phi = [&d](Complex w) { return d.phi(w); };
  const CVec3 radial = integrate_segment(phi, path[0], path[1], 8);
  CVec3 arc{};
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    arc += integrate_segment(phi, path[i], path[i + 1], 2);
  }
  return d.u0() + (radial + arc).real();
}

/// The immersion in the log-polar chart (s, t) -> u(e^{s + i t}).  Conformal,
/// with uniformly bounded derivatives across the annulus; grid sweeps use it.
inline Vec3 surface_point_logpolar(const WeierstrassData& d, double s, double t) {
  return surface_point(d, std::exp(Complex{s, t}));
}

/// Conformal factor Lambda = |mu|^2 (1 + |nu|^2)^2 / 4.
inline double metric_lambda(const WeierstrassData& d, Complex z) {
  const double m = std::abs(d.mu_at(z));
  const double n2 = std::norm(d.nu_at(z));
  return 0.25 * m * m * (1.0 + n2) * (1.0 + n2);
}

/// Unit normal via the stereographic image of nu.
inline Vec3 gauss_map(const WeierstrassData& d, Complex z) {
  const Complex nu = d.nu_at(z);
  const double n2 = std::norm(nu);
  if (!std::isfinite(n2)) return {0.0, 0.0, 1.0};  // pole of nu: north pole limit
  return Vec3{2.0 * nu.real(), 2.0 * nu.imag(), n2 - 1.0} / (1.0 + n2);
}

/// K = -(4 |nu'| / (|mu| (1 + |nu|^2)^2))^2; always <= 0.
inline double gauss_curvature(const WeierstrassData& d, Complex z) {
  const double m = std::abs(d.mu_at(z));
  if (!(m > 1e-12 * d.mu_boundary_scale())) {
    throw BranchPointError("gauss_curvature: branch point (mu = 0)");
  }
  const double n2 = std::norm(d.nu_at(z));
  const double np = std::abs(d.nu_prime_at(z));
  const double q = 4.0 * np / (m * (1.0 + n2) * (1.0 + n2));
  return -q * q;
}

/// z^4 (mu nu')^2 / 4: real and constant on the annulus exactly when the data
/// is a free-boundary immersion.
inline Complex hopf_quantity(const WeierstrassData& d, Complex z) {
  if (z == Complex{}) throw PoleError("hopf_quantity: z = 0");
  const Complex l = d.mu_nu_prime_at(z);
  const Complex z2 = z * z;
  return 0.25 * z2 * z2 * l * l;
}

/// Angular derivatives of the immersion along |z| = const:
/// u_theta = -Im(z Phi), u_thetatheta = -Re(z Phi + z^2 Phi').
inline std::pair<Vec3, Vec3> boundary_tangents(const WeierstrassData& d, Complex z) {
  const CVec3 phi = d.phi(z);
  const CVec3 dphi = d.phi_derivative(z);
  const Vec3 u_t = -1.0 * (z * phi).imag();
  const Vec3 u_tt = -1.0 * (z * phi + (z * z) * dphi).real();
  return {u_t, u_tt};
}

enum class BoundaryComponent { kInner, kOuter };

/// Curvature of the boundary space curve theta -> u(r e^{i theta}).
inline double boundary_curvature(const WeierstrassData& d, BoundaryComponent which,
                                 double theta) {
  const double r = which == BoundaryComponent::kInner ? d.rho() : 1.0;
  const auto [u_t, u_tt] = boundary_tangents(d, std::polar(r, theta));
  const double speed = u_t.norm();
  if (!(speed > 1e-14)) {
    throw DegenerateError("boundary_curvature: vanishing boundary speed");
  }
  return u_t.cross(u_tt).norm() / (speed * speed * speed);
}

/// d Lambda / d theta along |z| = const, by exact Laurent differentiation.
inline double metric_lambda_theta(const WeierstrassData& d, Complex z) {
  const Complex iz{-z.imag(), z.real()};
  const Complex mu = d.mu_at(z);
  const Complex nu = d.nu_at(z);
  // d|p|^2/dtheta = 2 Re(conj(p) i z p').
  const double dmu2 = 2.0 * (std::conj(mu) * iz * d.mu_prime_at(z)).real();
  const double dnu2 = 2.0 * (std::conj(nu) * iz * d.nu_prime_at(z)).real();
  const double m2 = std::norm(mu);
  const double one_n2 = 1.0 + std::norm(nu);
  return 0.25 * (dmu2 * one_n2 * one_n2 + m2 * 2.0 * one_n2 * dnu2);
}

/// Radial derivative u_r = Re(e^{i theta} Phi).
inline Vec3 radial_derivative(const WeierstrassData& d, Complex z) {
  const Complex dir = z / std::abs(z);
  return (dir * d.phi(z)).real();
}

/// Free-boundary residuals over both boundary circles:
/// sphere containment | |u| - 1 |, radial-parallelism |u x u_r|/|u_r|
/// (orthogonal intersection), |Im hopf|, and |dLambda/dtheta|.
struct FreeBoundaryResiduals {
  double sphere = 0.0;
  double orthogonality = 0.0;
  double hopf_imag = 0.0;
  double lambda_theta = 0.0;

  double max() const {
    return std::max({sphere, orthogonality, hopf_imag, lambda_theta});
  }
};

inline FreeBoundaryResiduals free_boundary_report(const WeierstrassData& d, int n) {
  if (n < 8) throw std::invalid_argument("free_boundary_report: grid size n < 8");
  FreeBoundaryResiduals res;
  for (double r : {d.rho(), 1.0}) {
    for (int k = 0; k < n; ++k) {
      const Complex z = std::polar(r, 2.0 * std::numbers::pi * k / n);
      const Vec3 u = surface_point(d, z);
      const Vec3 ur = radial_derivative(d, z);
      res.sphere = std::max(res.sphere, std::abs(u.norm() - 1.0));
      res.orthogonality = std::max(res.orthogonality, u.cross(ur).norm() / ur.norm());
      res.hopf_imag = std::max(res.hopf_imag, std::abs(hopf_quantity(d, z).imag()));
      res.lambda_theta = std::max(res.lambda_theta, std::abs(metric_lambda_theta(d, z)));
    }
  }
  return res;
}

/// Data of the reparametrized immersion u o f^{-1} under the annulus
/// automorphism f(w) = lambda w (sign +1, |lambda| = 1) or f(w) = lambda / w
/// (sign -1, |lambda| = rho).  The image surface is unchanged.
inline WeierstrassData apply_schottky(const WeierstrassData& d, Complex lambda,
                                      int sign) {
  if (sign == +1) {
    if (std::abs(std::abs(lambda) - 1.0) > 1e-12) {
      throw RepresentationError("apply_schottky: sign +1 requires |lambda| = 1");
    }
    return WeierstrassData(lambda * d.mu().with_scaled_argument(lambda),
                           d.nu().with_scaled_argument(lambda), d.rho(), d.u0(),
                           d.z_ref() / lambda);
  }
  if (sign == -1) {
    if (std::abs(std::abs(lambda) - d.rho()) > 1e-12) {
      throw RepresentationError("apply_schottky: sign -1 requires |lambda| = rho");
    }
    // mu~(w) = mu(lambda/w) * (-lambda / w^2).
    const LaurentPoly mu_new =
        d.mu().with_inverted_argument(lambda) * LaurentPoly::monomial(-2, -lambda);
    return WeierstrassData(mu_new, d.nu().with_inverted_argument(lambda), d.rho(),
                           d.u0(), lambda / d.z_ref());
  }
  throw RepresentationError("apply_schottky: sign must be +1 or -1");
}

/// One immersion sample: position, normal, conformal factor, curvature, Hopf
/// quantity.
struct SurfaceSample {
  Complex z;
  Vec3 u;
  Vec3 N;
  double Lambda = 0.0;
  double K = 0.0;
  Complex hopf;
};

inline SurfaceSample sample(const WeierstrassData& d, Complex z) {
  return {z,
          surface_point(d, z),
          gauss_map(d, z),
          metric_lambda(d, z),
          gauss_curvature(d, z),
          hopf_quantity(d, z)};
}

}  // namespace fbms
