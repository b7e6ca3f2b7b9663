#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "fbms/catenoid.hpp"
#include "fbms/herisson.hpp"
#include "fbms/vec3.hpp"

namespace fbms {

/// Symmetric Hausdorff distance between two point clouds (brute force with
/// early inner-loop exit).
inline double hausdorff_distance(const std::vector<Vec3>& a,
                                 const std::vector<Vec3>& b) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("hausdorff_distance: empty cloud");
  }
  auto directed = [](const std::vector<Vec3>& from, const std::vector<Vec3>& to) {
    double worst2 = 0.0;
    for (const Vec3& p : from) {
      double best2 = std::numeric_limits<double>::infinity();
      for (const Vec3& q : to) {
        const double d2 = (p - q).norm2();
        if (d2 < best2) {
          best2 = d2;
          if (best2 <= worst2) break;  // cannot raise the directed maximum
        }
      }
      worst2 = std::max(worst2, best2);
    }
    return worst2;
  };
  return std::sqrt(std::max(directed(a, b), directed(b, a)));
}

/// Point cloud of the double-cone solution's gradient image on an inclusive
/// (n_theta x n_phi) band grid.
inline std::vector<Vec3> double_cone_gradient_cloud(const OnePhaseSolution& sol,
                                                    int n_theta, int n_phi) {
  std::vector<Vec3> cloud;
  cloud.reserve(static_cast<std::size_t>(n_theta) * n_phi);
  for (int i = 0; i < n_theta; ++i) {
    const double theta = sol.domain.theta_lo +
                         (sol.domain.theta_hi - sol.domain.theta_lo) * i /
                             (n_theta - 1.0);
    for (int j = 0; j < n_phi; ++j) {
      cloud.push_back(sol.grad(theta, 2.0 * std::numbers::pi * j / n_phi));
    }
  }
  return cloud;
}

/// Critical-catenoid cloud on the grid matched to the band grid above via
/// s = artanh(cos theta).  n_phi must be even so the half-turn azimuth offset
/// between the two parametrizations lands on the same grid.
inline std::vector<Vec3> matched_catenoid_cloud(const OnePhaseSolution& sol,
                                                const CatenoidParams& cat,
                                                int n_theta, int n_phi) {
  if (n_phi % 2 != 0) {
    throw std::invalid_argument("matched_catenoid_cloud: n_phi must be even");
  }
  std::vector<Vec3> cloud;
  cloud.reserve(static_cast<std::size_t>(n_theta) * n_phi);
  for (int i = 0; i < n_theta; ++i) {
    const double theta = sol.domain.theta_lo +
                         (sol.domain.theta_hi - sol.domain.theta_lo) * i /
                             (n_theta - 1.0);
    const double s = std::atanh(std::cos(theta));
    for (int j = 0; j < n_phi; ++j) {
      cloud.push_back(catenoid_point(cat, s, 2.0 * std::numbers::pi * j / n_phi));
    }
  }
  return cloud;
}

/// Hausdorff distance between the gradient image of the double-cone solution
/// and the critical catenoid, on matched grids sharing the z-axis.
inline double herisson_catenoid_hausdorff(int n_theta, int n_phi) {
  const OnePhaseSolution sol = solve_one_phase(OnePhaseKind::kDoubleCone);
  const CatenoidParams cat = solve_critical();
  return hausdorff_distance(double_cone_gradient_cloud(sol, n_theta, n_phi),
                            matched_catenoid_cloud(sol, cat, n_theta, n_phi));
}

}  // namespace fbms
