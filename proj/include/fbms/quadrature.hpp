#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "fbms/errors.hpp"
#include "fbms/vec3.hpp"

namespace fbms {

/// 16-point Gauss-Legendre rule on [-1, 1]; exact through degree 31.
inline constexpr std::array<double, 16> kGauss16Nodes = {
    -0.98940093499164993851, -0.94457502307323260027, -0.86563120238783175520,
    -0.75540440835500299865, -0.61787624440264377057, -0.45801677765722736968,
    -0.28160355077925891543, -0.09501250983763745439, 0.09501250983763745439,
    0.28160355077925891543,  0.45801677765722736968,  0.61787624440264377057,
    0.75540440835500299865,  0.86563120238783175520,  0.94457502307323260027,
    0.98940093499164993851};

inline constexpr std::array<double, 16> kGauss16Weights = {
    0.02715245941175403743, 0.06225352393864770628, 0.09515851168249259140,
    0.12462897125553402955, 0.14959598881657676372, 0.16915651939500261913,
    0.18260341504492361153, 0.18945061045506858544, 0.18945061045506858544,
    0.18260341504492361153, 0.16915651939500261913, 0.14959598881657676372,
    0.12462897125553402955, 0.09515851168249259140, 0.06225352393864770628,
    0.02715245941175403743};

namespace detail {

template <class V>
bool quad_value_finite(const V& v) {
  if constexpr (std::is_same_v<V, Complex>) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  } else {
    return v.finite();
  }
}

}  // namespace detail

/// Complex line integral of f along the straight segment a -> b, using
/// `panels` composite 16-point Gauss-Legendre panels.  V is Complex or CVec3.
template <class F>
auto integrate_segment(F&& f, Complex a, Complex b, int panels) {
  using V = std::remove_cvref_t<decltype(f(a))>;
  const Complex dir = b - a;
  V total{};
  for (int p = 0; p < panels; ++p) {
    const double t0 = static_cast<double>(p) / panels;
    const double t1 = static_cast<double>(p + 1) / panels;
    const double mid = 0.5 * (t0 + t1);
    const double half = 0.5 * (t1 - t0);
    for (std::size_t k = 0; k < kGauss16Nodes.size(); ++k) {
      const double t = mid + half * kGauss16Nodes[k];
      const Complex z = a + t * dir;
      V fz = f(z);
      if (!detail::quad_value_finite(fz)) {
        throw NumericError("integrate_path: non-finite integrand at z=(" +
                           std::to_string(z.real()) + ", " +
                           std::to_string(z.imag()) + ")");
      }
      total += fz * (half * kGauss16Weights[k]);
    }
  }
  return total * dir;
}

/// Path integral of f along a polyline, `n_per_segment` Gauss-Legendre panels
/// per segment.
template <class F>
auto integrate_path(F&& f, std::span<const Complex> path, int n_per_segment) {
  using V = std::remove_cvref_t<decltype(f(path[0]))>;
  if (path.size() < 2) {
    throw std::invalid_argument("integrate_path: need at least two path points");
  }
  if (n_per_segment < 2) {
    throw std::invalid_argument("integrate_path: n_per_segment must be >= 2");
  }
  V total{};
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    total += integrate_segment(f, path[i], path[i + 1], n_per_segment);
  }
  return total;
}

template <class F>
auto integrate_path(F&& f, const std::vector<Complex>& path, int n_per_segment) {
  return integrate_path(std::forward<F>(f), std::span<const Complex>(path),
                        n_per_segment);
}

}  // namespace fbms
