#pragma once

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "fbms/errors.hpp"
#include "fbms/report.hpp"
#include "fbms/vec3.hpp"

namespace fbms {

/// Rectangular surface grid, row-major.  periodic_cols closes the seam in the
/// column (angular) direction.
struct SurfaceGrid {
  int rows = 0;
  int cols = 0;
  bool periodic_cols = false;
  std::vector<Vec3> points;

  const Vec3& at(int i, int j) const { return points[static_cast<std::size_t>(i) * cols + j]; }
  Vec3& at(int i, int j) { return points[static_cast<std::size_t>(i) * cols + j]; }

  static SurfaceGrid make(int rows, int cols, bool periodic_cols) {
    if (rows < 2 || cols < 2) throw DegenerateError("SurfaceGrid: need a 2x2 grid at least");
    SurfaceGrid g;
    g.rows = rows;
    g.cols = cols;
    g.periodic_cols = periodic_cols;
    g.points.resize(static_cast<std::size_t>(rows) * cols);
    return g;
  }
};

/// Wavefront OBJ: `v x y z` lines (12 significant digits), then 1-based
/// `f i j k` triangles, quads split row-major; a periodic seam is closed.
inline std::string render_obj(const SurfaceGrid& g) {
  if (g.rows < 2 || g.cols < 2 || static_cast<int>(g.points.size()) != g.rows * g.cols) {
    throw DegenerateError("render_obj: degenerate grid");
  }
  std::string out;
  out.reserve(g.points.size() * 40);
  for (const Vec3& p : g.points) {
    out += "v " + format_double(p.x, 12) + " " + format_double(p.y, 12) + " " +
           format_double(p.z, 12) + "\n";
  }
  const int jmax = g.periodic_cols ? g.cols : g.cols - 1;
  for (int i = 0; i + 1 < g.rows; ++i) {
    for (int j = 0; j < jmax; ++j) {
      const int jn = (j + 1) % g.cols;
      const int a = i * g.cols + j + 1;
      const int b = i * g.cols + jn + 1;
      const int c = (i + 1) * g.cols + jn + 1;
      const int d = (i + 1) * g.cols + j + 1;
      out += "f " + std::to_string(a) + " " + std::to_string(b) + " " +
             std::to_string(c) + "\n";
      out += "f " + std::to_string(a) + " " + std::to_string(c) + " " +
             std::to_string(d) + "\n";
    }
  }
  return out;
}

/// CSV: header row, then one record per line, 12 significant digits.
inline std::string render_csv(const std::vector<std::string>& columns,
                              const std::vector<std::vector<double>>& rows) {
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    out += columns[i];
    out += (i + 1 < columns.size()) ? "," : "";
  }
  out += "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out += format_double(row[i], 12);
      out += (i + 1 < row.size()) ? "," : "";
    }
    out += "\n";
  }
  return out;
}

/// Write-to-temp then rename, so readers never observe partial files.
inline void atomic_write_file(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(target.parent_path(), ec);
  }
  const fs::path tmp = target.string() + ".tmp";
  std::FILE* f = std::fopen(tmp.c_str(), "wb");
  if (f == nullptr) throw IoError("cannot open for writing: " + tmp.string());
  const std::size_t written = std::fwrite(content.data(), 1, content.size(), f);
  const bool flushed = std::fclose(f) == 0;
  if (written != content.size() || !flushed) {
    std::error_code ec;
    fs::remove(tmp, ec);
    throw IoError("short write: " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot rename into place: " + path);
  }
}

enum class MeshFormat { kObj, kCsv };

/// CSV rendering of a grid: one row per vertex with its grid indices.
inline std::string render_grid_csv(const SurfaceGrid& g) {
  std::vector<std::vector<double>> rows;
  rows.reserve(g.points.size());
  for (int i = 0; i < g.rows; ++i) {
    for (int j = 0; j < g.cols; ++j) {
      const Vec3& p = g.at(i, j);
      rows.push_back({static_cast<double>(i), static_cast<double>(j), p.x, p.y, p.z});
    }
  }
  return render_csv({"i", "j", "x", "y", "z"}, rows);
}

inline void write_mesh(const SurfaceGrid& grid, MeshFormat format,
                       const std::string& path) {
  atomic_write_file(
      path, format == MeshFormat::kObj ? render_obj(grid) : render_grid_csv(grid));
}

inline void write_mesh(const SurfaceGrid& grid, const std::string& path) {
  write_mesh(grid, MeshFormat::kObj, path);
}

inline void write_table(const std::vector<std::string>& columns,
                        const std::vector<std::vector<double>>& rows,
                        const std::string& path) {
  atomic_write_file(path, render_csv(columns, rows));
}

}  // namespace fbms
