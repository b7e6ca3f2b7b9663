#pragma once

// cli_io: run configurations, suite dispatch, file emission.

#include <numbers>
#include <string>
#include <vector>

#include "fbms/mesh_io.hpp"
#include "fbms/suites.hpp"

namespace fbms {

enum class Command {
  kCriticalCatenoid,
  kOnePhase,
  kHerisson,
  kSpectral,
  kVerifyAll,
  kExport,
};

enum class OutputFormat { kObj, kCsv, kJson };

struct RunConfig {
  Command command = Command::kVerifyAll;
  int grid_n = 32;
  ToleranceMap tol;
  std::string output_path;  // empty: no file written
  OutputFormat format = OutputFormat::kJson;

  OnePhaseKind one_phase_kind = OnePhaseKind::kDoubleCone;
  std::string export_surface = "critical-catenoid";
  double spectral_kappa = 1.0;
  double spectral_theta0 = std::numbers::pi / 3.0;
  double herisson_A = 0.0;  // 0,0: use the double-cone solution
  double herisson_B = 0.0;
  double band_lo = 0.0;  // lo >= hi: input's natural band
  double band_hi = 0.0;
};

struct RunOutcome {
  VerificationReport report;
  std::vector<std::string> files_written;
};

inline OutputFormat parse_format(const std::string& s) {
  if (s == "obj") return OutputFormat::kObj;
  if (s == "csv") return OutputFormat::kCsv;
  if (s == "json") return OutputFormat::kJson;
  throw ConfigError("unknown format: " + s);
}

namespace detail {

/// theta, g, g_prime, |grad v| over the closed band, boundary rows included.
inline std::pair<std::vector<std::string>, std::vector<std::vector<double>>>
one_phase_table(const OnePhaseSolution& sol, int grid_n) {
  std::vector<std::vector<double>> rows;
  rows.reserve(grid_n + 1);
  for (int i = 0; i <= grid_n; ++i) {
    const double theta = sol.domain.theta_lo +
                         (sol.domain.theta_hi - sol.domain.theta_lo) * i / grid_n;
    rows.push_back({theta, sol.scaled_g(theta), sol.scaled_g_prime(theta),
                    sol.grad_norm(theta)});
  }
  return {{"theta", "g", "g_prime", "|grad v|"}, rows};
}

inline SurfaceGrid weierstrass_grid(const WeierstrassData& d, int grid_n) {
  SurfaceGrid g = SurfaceGrid::make(grid_n, grid_n, /*periodic_cols=*/true);
  for (int i = 0; i < grid_n; ++i) {
    const double r = d.rho() + (1.0 - d.rho()) * i / (grid_n - 1.0);
    for (int j = 0; j < grid_n; ++j) {
      const double theta = 2.0 * std::numbers::pi * j / grid_n;
      g.at(i, j) = surface_point(d, std::polar(r, theta));
    }
  }
  return g;
}

inline SurfaceGrid catenoid_chart_grid(const CatenoidParams& cat, int grid_n) {
  SurfaceGrid g = SurfaceGrid::make(grid_n, grid_n, /*periodic_cols=*/true);
  for (int i = 0; i < grid_n; ++i) {
    const double s = -cat.alpha + 2.0 * cat.alpha * i / (grid_n - 1.0);
    for (int j = 0; j < grid_n; ++j) {
      g.at(i, j) = catenoid_point(cat, s, 2.0 * std::numbers::pi * j / grid_n);
    }
  }
  return g;
}

template <SphericalProfile P>
SurfaceGrid herisson_grid(const P& p, const ConeDomain& dom, int grid_n) {
  SurfaceGrid g = SurfaceGrid::make(grid_n, grid_n, /*periodic_cols=*/true);
  for (int i = 0; i < grid_n; ++i) {
    const double theta =
        dom.theta_lo + (dom.theta_hi - dom.theta_lo) * i / (grid_n - 1.0);
    for (int j = 0; j < grid_n; ++j) {
      g.at(i, j) = gradient_map(p, theta, 2.0 * std::numbers::pi * j / grid_n);
    }
  }
  return g;
}

inline SurfaceGrid export_grid(const std::string& surface, int grid_n) {
  if (surface == "critical-catenoid") {
    return weierstrass_grid(to_weierstrass(solve_critical()), grid_n);
  }
  if (surface == "catenoid") {
    return catenoid_chart_grid(solve_critical(), grid_n);
  }
  if (surface == "herisson") {
    const OnePhaseSolution dc = solve_one_phase(OnePhaseKind::kDoubleCone);
    const AxisymmetricHarmonic scaled(dc.c * dc.fn.A, dc.c * dc.fn.B);
    return herisson_grid(scaled, dc.domain, grid_n);
  }
  if (surface == "plane-disk") {
    const WeierstrassData d(LaurentPoly{{0, Complex{2.0, 0.0}}}, LaurentPoly{}, 0.3,
                            Vec3{1.0, 0.0, 0.0});
    return weierstrass_grid(d, grid_n);
  }
  throw ConfigError("unknown export surface: " + surface);
}

inline std::pair<std::vector<std::string>, std::vector<std::vector<double>>>
report_table(const VerificationReport& rep) {
  std::vector<std::vector<double>> rows;
  rows.reserve(rep.checks.size());
  for (const CheckRecord& c : rep.checks) {
    rows.push_back({c.measured, c.tolerance, c.pass ? 1.0 : 0.0});
  }
  return {{"measured", "tolerance", "pass"}, rows};
}

}  // namespace detail

inline void validate(const RunConfig& cfg) {
  if (cfg.grid_n < 8) throw ConfigError("grid_n must be >= 8");
  for (const auto& [name, value] : cfg.tol) {
    if (!(value > 0.0)) throw ConfigError("tolerance '" + name + "' must be positive");
  }
  if (cfg.command == Command::kExport) {
    if (cfg.output_path.empty()) throw ConfigError("export requires an output path");
    if (cfg.format == OutputFormat::kJson) {
      throw ConfigError("export emits obj or csv, not json");
    }
  }
  if (cfg.command != Command::kExport && cfg.command != Command::kHerisson &&
      cfg.format == OutputFormat::kObj) {
    throw ConfigError("obj output is only available for export and herisson");
  }
}

/// Execute the configured command.  Files are written atomically; the report
/// carries every check the command ran.
inline RunOutcome run(const RunConfig& cfg) {
  validate(cfg);
  RunOutcome out;

  auto emit_report = [&cfg, &out]() {
    if (cfg.output_path.empty()) return;
    if (cfg.format == OutputFormat::kJson) {
      atomic_write_file(cfg.output_path, render_json_report(out.report, cfg.grid_n));
    } else {
      const auto [cols, rows] = detail::report_table(out.report);
      atomic_write_file(cfg.output_path, render_csv(cols, rows));
    }
    out.files_written.push_back(cfg.output_path);
  };

  switch (cfg.command) {
    case Command::kCriticalCatenoid: {
      out.report = suite_critical_catenoid(cfg.grid_n, cfg.tol);
      emit_report();
      break;
    }
    case Command::kOnePhase: {
      out.report = suite_one_phase(cfg.tol);
      if (!cfg.output_path.empty() && cfg.format == OutputFormat::kCsv) {
        const OnePhaseSolution sol = solve_one_phase(cfg.one_phase_kind);
        const auto [cols, rows] = detail::one_phase_table(sol, cfg.grid_n);
        atomic_write_file(cfg.output_path, render_csv(cols, rows));
        out.files_written.push_back(cfg.output_path);
      } else {
        emit_report();
      }
      break;
    }
    case Command::kHerisson: {
      const bool custom = cfg.herisson_A != 0.0 || cfg.herisson_B != 0.0;
      SurfaceGrid image;
      if (custom) {
        // user-supplied profile: run the inversion/minimality checks on it
        const AxisymmetricHarmonic fn(cfg.herisson_A, cfg.herisson_B);
        ConeDomain dom(0.4, std::numbers::pi - 0.4);
        if (cfg.band_lo < cfg.band_hi) {
          try {
            dom = ConeDomain(cfg.band_lo, cfg.band_hi);
          } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
          }
        }
        out.report.suite = "herisson";
        const auto samples = herisson_surface(fn, dom, cfg.grid_n, cfg.grid_n);
        const GaussInversionReport p1 = verify_gauss_inversion(samples);
        out.report.require_le("gauss-inversion[requested]", p1.max_normal_dev,
                              tol_or(cfg.tol, "normal", 1e-6),
                              "image normal equals the source direction up to a fixed sign");
        out.report.require_le("radii-vs-hessian-trace[requested]",
                              p1.max_radii_mismatch, tol_or(cfg.tol, "radii", 1e-4),
                              "sum of curvature radii equals the Hessian trace, relative");
        out.report.require_le("image-minimality[requested]",
                              verify_image_minimality(samples).max_mean_curvature,
                              tol_or(cfg.tol, "minimality", 1e-5),
                              "harmonic input generates a minimal image surface");
        image = detail::herisson_grid(fn, dom, cfg.grid_n);
      } else {
        out.report = suite_herisson(cfg.grid_n, cfg.tol);
        image = detail::export_grid("herisson", cfg.grid_n);
      }
      if (!cfg.output_path.empty() && cfg.format == OutputFormat::kObj) {
        atomic_write_file(cfg.output_path, render_obj(image));
        out.files_written.push_back(cfg.output_path);
      } else {
        emit_report();
      }
      break;
    }
    case Command::kSpectral: {
      out.report = suite_spectral(cfg.grid_n, cfg.tol);
      // requested cap, in addition to the standard sweep
      const SpectralDiskResult r =
          spectral_disk_check(cfg.spectral_theta0, cfg.spectral_kappa, cfg.grid_n);
      const std::string tag =
          "cap[requested,kappa=" + format_double(cfg.spectral_kappa, 6) +
          ",theta0=" + format_double(cfg.spectral_theta0, 6) + "]";
      out.report.require_le(tag + ".pde-residual", r.pde_residual,
                            tol_or(cfg.tol, "pde", 1e-5),
                            "intrinsic Laplace-Beltrami residual of v = cos(theta)");
      out.report.require_le(tag + ".gradient-spread", r.grad_spread,
                            tol_or(cfg.tol, "spread", 1e-8),
                            "|grad v| constant along the boundary circle");
      emit_report();
      break;
    }
    case Command::kVerifyAll: {
      out.report = verify_all(cfg.grid_n, cfg.tol);
      emit_report();
      break;
    }
    case Command::kExport: {
      const SurfaceGrid grid = detail::export_grid(cfg.export_surface, cfg.grid_n);
      write_mesh(grid,
                 cfg.format == OutputFormat::kObj ? MeshFormat::kObj : MeshFormat::kCsv,
                 cfg.output_path);
      out.files_written.push_back(cfg.output_path);
      out.report.suite = "export";
      break;
    }
  }
  return out;
}

}  // namespace fbms
