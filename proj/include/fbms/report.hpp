#pragma once

#include <charconv>
#include <string>
#include <system_error>
#include <vector>

#include "fbms/errors.hpp"

namespace fbms {

/// Locale-independent shortest-general formatting with a fixed number of
/// significant digits (reports use 17, tables 12).
inline std::string format_double(double v, int precision) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, precision);
  if (res.ec != std::errc{}) throw NumericError("format_double failed");
  return std::string(buf, res.ptr);
}

/// One verification check.  `pass` is `measured <= tolerance` for defect
/// bounds and `measured > tolerance` for negative controls (floor checks).
struct CheckRecord {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string provenance;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckRecord> checks;

  /// Defect bound: pass iff measured <= tolerance.
  void require_le(const std::string& name, double measured, double tolerance,
                  const std::string& provenance) {
    checks.push_back({name, measured, tolerance, measured <= tolerance, provenance});
  }

  /// Floor check (negative controls): pass iff measured > tolerance.
  void require_gt(const std::string& name, double measured, double tolerance,
                  const std::string& provenance) {
    checks.push_back({name, measured, tolerance, measured > tolerance, provenance});
  }

  void merge(const VerificationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }

  bool all_pass() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }

  int passed_count() const {
    int n = 0;
    for (const auto& c : checks) n += c.pass ? 1 : 0;
    return n;
  }
};

namespace detail {

inline void json_escape_to(std::string& out, const std::string& s) {
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += ch;
    }
  }
}

}  // namespace detail

/// Deterministic JSON rendering: fixed field order, 17 significant digits,
/// newline-terminated.  Identical reports render byte-identically.
inline std::string render_json_report(const VerificationReport& rep, int grid_n) {
  std::string out;
  out += "{\n";
  out += "  \"suite\": \"";
  detail::json_escape_to(out, rep.suite);
  out += "\",\n";
  out += "  \"grid_n\": " + std::to_string(grid_n) + ",\n";
  out += "  \"checks\": [\n";
  for (std::size_t i = 0; i < rep.checks.size(); ++i) {
    const CheckRecord& c = rep.checks[i];
    out += "    {\"name\": \"";
    detail::json_escape_to(out, c.name);
    out += "\", \"measured\": " + format_double(c.measured, 17);
    out += ", \"tolerance\": " + format_double(c.tolerance, 17);
    out += ", \"pass\": ";
    out += c.pass ? "true" : "false";
    out += ", \"provenance\": \"";
    detail::json_escape_to(out, c.provenance);
    out += "\"}";
    if (i + 1 < rep.checks.size()) out += ",";
    out += "\n";
  }
  out += "  ],\n";
  const int passed = rep.passed_count();
  const int total = static_cast<int>(rep.checks.size());
  out += "  \"summary\": {\"total\": " + std::to_string(total) +
         ", \"passed\": " + std::to_string(passed) +
         ", \"failed\": " + std::to_string(total - passed) + ", \"pass\": " +
         (rep.all_pass() ? "true" : "false") + "}\n";
  out += "}\n";
  return out;
}

}  // namespace fbms
