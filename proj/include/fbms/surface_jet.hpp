#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "fbms/errors.hpp"
#include "fbms/vec3.hpp"

namespace fbms {

/// Second-order jet of a parametrized surface at one point, from central
/// finite differences with step h.
struct SurfaceJet {
  Vec3 p;
  Vec3 p_s, p_t;
  Vec3 p_ss, p_st, p_tt;
  double h = 0.0;
};

template <class F>
SurfaceJet surface_jet(F&& f, double s, double t, double h) {
  if (!(h > 0.0)) throw NumericError("surface_jet: step h must be positive");
  const Vec3 c = f(s, t);
  const Vec3 e = f(s + h, t);
  const Vec3 w = f(s - h, t);
  const Vec3 n = f(s, t + h);
  const Vec3 so = f(s, t - h);
  const Vec3 ne = f(s + h, t + h);
  const Vec3 nw = f(s - h, t + h);
  const Vec3 se = f(s + h, t - h);
  const Vec3 sw = f(s - h, t - h);

  SurfaceJet jet;
  jet.p = c;
  jet.p_s = (e - w) / (2.0 * h);
  jet.p_t = (n - so) / (2.0 * h);
  jet.p_ss = (e - 2.0 * c + w) / (h * h);
  jet.p_tt = (n - 2.0 * c + so) / (h * h);
  jet.p_st = (ne - nw - se + sw) / (4.0 * h * h);
  jet.h = h;
  if (!jet.p.finite() || !jet.p_s.finite() || !jet.p_t.finite() ||
      !jet.p_ss.finite() || !jet.p_st.finite() || !jet.p_tt.finite()) {
    throw NumericError("surface_jet: non-finite surface values on the stencil");
  }
  return jet;
}

/// Curvature data at one surface point.  N = normalized p_s x p_t; the signs
/// of H, kappa1, kappa2 follow that chart orientation.
struct CurvatureRecord {
  double K = 0.0;
  double H = 0.0;
  double kappa1 = 0.0;
  double kappa2 = 0.0;
  Vec3 N;
};

/// First/second fundamental forms from the jet;
/// K = (LN - M^2)/(EG - F^2), H = (EN - 2FM + GL)/(2(EG - F^2)).
inline CurvatureRecord curvatures(const SurfaceJet& jet) {
  const double E = jet.p_s.dot(jet.p_s);
  const double F = jet.p_s.dot(jet.p_t);
  const double G = jet.p_t.dot(jet.p_t);
  const double det = E * G - F * F;
  // Tangents at the finite-difference noise floor: the chart is constant to
  // rounding, not an immersion.
  if (jet.h > 0.0) {
    const double noise =
        1e3 * std::numeric_limits<double>::epsilon() *
        std::max(1.0, jet.p.norm()) / jet.h;
    if (E + G <= noise * noise) {
      throw DegenerateError("curvatures: tangent vectors below the noise floor");
    }
  }
  // Rank-deficient when the area element is tiny against the tangent scale.
  const double lim = 1e-10 * (E + G);
  if (!(det > lim * lim)) {
    throw DegenerateError("curvatures: degenerate first fundamental form");
  }
  const Vec3 normal = jet.p_s.cross(jet.p_t) / std::sqrt(det);
  const double L = jet.p_ss.dot(normal);
  const double M = jet.p_st.dot(normal);
  const double N2 = jet.p_tt.dot(normal);

  CurvatureRecord rec;
  rec.N = normal;
  rec.K = (L * N2 - M * M) / det;
  rec.H = (E * N2 - 2.0 * F * M + G * L) / (2.0 * det);
  const double disc = std::sqrt(std::max(rec.H * rec.H - rec.K, 0.0));
  rec.kappa1 = rec.H + disc;
  rec.kappa2 = rec.H - disc;
  return rec;
}

}  // namespace fbms
