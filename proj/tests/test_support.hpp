#pragma once

// Shared test oracles: exact antiderivative integration of Weierstrass data
// (independent of the quadrature path machinery) and finite-difference
// operators for scalar fields on R^3.

#include <cmath>
#include <utility>

#include "fbms/laurent.hpp"
#include "fbms/vec3.hpp"
#include "fbms/weierstrass.hpp"

namespace fbms::test {

// Frozen reference constants, computed by 30-digit bisection on the stated
// equations (independent of the library root finder).
inline constexpr double kAlphaStar = 1.1996786402577338;   // root of s tanh s = 1
inline constexpr double kQ1Root = 0.83355655960096470;     // root of x artanh x = 1
inline constexpr double kCriticalNeck = 0.46048508825013391;   // sqrt(a^2-1)/a^2
inline constexpr double kBoundaryHeight = 0.55243412453088322; // a_neck * alpha
inline constexpr double kTheta1 = 0.58528158893258116;         // arccos(kQ1Root)
inline constexpr double kAperture = 1.1705631778651623;        // 2 kTheta1
inline constexpr double kVariantRoot = 1.3262590186281903;  // root of sqrt(s) tanh s = 1

/// Termwise antiderivative of the non-residue part; *residue receives c_{-1}.
inline LaurentPoly antiderivative(const LaurentPoly& p, Complex* residue) {
  LaurentPoly F;
  *residue = {};
  for (const auto& [n, c] : p.coefficients()) {
    if (n == -1) {
      *residue = c;
    } else {
      F.set(n + 1, c / static_cast<double>(n + 1));
    }
  }
  return F;
}

/// Exact closed-form integration of the immersion: independent oracle for
/// surface_point.  Valid because the data's residues are real (validated at
/// construction), so the log contributions reduce to Re(c_{-1}) ln|z|.
class ExactIntegrator {
 public:
  explicit ExactIntegrator(const WeierstrassData& d) : d_(&d) {
    const LaurentPoly mu_nu = d.mu() * d.nu();
    const LaurentPoly mu_nu2 = mu_nu * d.nu();
    const LaurentPoly phi[3] = {0.5 * (d.mu() - mu_nu2),
                                Complex{0.0, 0.5} * (d.mu() + mu_nu2), mu_nu};
    for (int i = 0; i < 3; ++i) F_[i] = antiderivative(phi[i], &res_[i]);
  }

  Vec3 point(Complex z) const {
    const Complex zr = d_->z_ref();
    const double log_ratio = std::log(std::abs(z) / std::abs(zr));
    Vec3 u = d_->u0();
    double* comp[3] = {&u.x, &u.y, &u.z};
    for (int i = 0; i < 3; ++i) {
      *comp[i] += (F_[i](z) - F_[i](zr)).real() + res_[i].real() * log_ratio;
    }
    return u;
  }

 private:
  const WeierstrassData* d_;
  LaurentPoly F_[3];
  Complex res_[3];
};

/// 7-point finite-difference Laplacian of a scalar field on R^3.
template <class F>
double fd_laplacian3(F&& f, const Vec3& p, double h) {
  const double c = f(p);
  double acc = 0.0;
  acc += f({p.x + h, p.y, p.z}) + f({p.x - h, p.y, p.z});
  acc += f({p.x, p.y + h, p.z}) + f({p.x, p.y - h, p.z});
  acc += f({p.x, p.y, p.z + h}) + f({p.x, p.y, p.z - h});
  return (acc - 6.0 * c) / (h * h);
}

template <class F>
Vec3 fd_gradient3(F&& f, const Vec3& p, double h) {
  return {(f({p.x + h, p.y, p.z}) - f({p.x - h, p.y, p.z})) / (2.0 * h),
          (f({p.x, p.y + h, p.z}) - f({p.x, p.y - h, p.z})) / (2.0 * h),
          (f({p.x, p.y, p.z + h}) - f({p.x, p.y, p.z - h})) / (2.0 * h)};
}

/// 3x3 finite-difference Hessian (symmetric part).
template <class F>
void fd_hessian3(F&& f, const Vec3& p, double h, double out[3][3]) {
  auto shift = [&p](int axis, double d) {
    Vec3 q = p;
    (axis == 0 ? q.x : axis == 1 ? q.y : q.z) += d;
    return q;
  };
  const double c = f(p);
  for (int i = 0; i < 3; ++i) {
    out[i][i] = (f(shift(i, h)) - 2.0 * c + f(shift(i, -h))) / (h * h);
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      auto shift2 = [&](double di, double dj) {
        Vec3 q = p;
        (i == 0 ? q.x : i == 1 ? q.y : q.z) += di;
        (j == 0 ? q.x : j == 1 ? q.y : q.z) += dj;
        return f(q);
      };
      out[i][j] = out[j][i] =
          (shift2(h, h) - shift2(h, -h) - shift2(-h, h) + shift2(-h, -h)) /
          (4.0 * h * h);
    }
  }
}

}  // namespace fbms::test
