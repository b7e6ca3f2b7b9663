// Command-line front end: verification suites, solution tables, mesh export.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fbms/run.hpp"

namespace {

struct CliOptions {
  fbms::RunConfig cfg;
  std::vector<std::string> tol_args;
  std::string config_file;
  std::string format = "json";
  std::string kind = "double_cone";
};

void apply_tol_args(const std::vector<std::string>& args, fbms::ToleranceMap* tol) {
  for (const std::string& a : args) {
    const auto eq = a.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw fbms::ConfigError("--tol expects name=value, got: " + a);
    }
    try {
      (*tol)[a.substr(0, eq)] = std::stod(a.substr(eq + 1));
    } catch (const std::exception&) {
      throw fbms::ConfigError("--tol value is not a number: " + a);
    }
  }
}

fbms::OnePhaseKind parse_kind(const std::string& s) {
  if (s == "halfspace") return fbms::OnePhaseKind::kHalfspace;
  if (s == "double_cone" || s == "double-cone") return fbms::OnePhaseKind::kDoubleCone;
  throw fbms::ConfigError("unknown one-phase kind: " + s);
}

// key=value configuration file; values take precedence over flags.
void apply_config_file(const std::string& path, CliOptions* opt) {
  std::ifstream in(path);
  if (!in) throw fbms::IoError("cannot read config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    const auto end = line.find_last_not_of(" \t\r");
    line = line.substr(begin, end - begin + 1);
    const auto eq = line.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw fbms::ConfigError("config line " + std::to_string(lineno) +
                              ": expected key=value");
    }
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    try {
      if (key == "grid_n") {
        opt->cfg.grid_n = std::stoi(value);
      } else if (key == "format") {
        opt->format = value;
      } else if (key == "output") {
        opt->cfg.output_path = value;
      } else if (key == "kind") {
        opt->kind = value;
      } else if (key == "surface") {
        opt->cfg.export_surface = value;
      } else if (key == "kappa") {
        opt->cfg.spectral_kappa = std::stod(value);
      } else if (key == "theta0") {
        opt->cfg.spectral_theta0 = std::stod(value);
      } else if (key == "A") {
        opt->cfg.herisson_A = std::stod(value);
      } else if (key == "B") {
        opt->cfg.herisson_B = std::stod(value);
      } else if (key == "band_lo") {
        opt->cfg.band_lo = std::stod(value);
      } else if (key == "band_hi") {
        opt->cfg.band_hi = std::stod(value);
      } else if (key.rfind("tol.", 0) == 0) {
        opt->cfg.tol[key.substr(4)] = std::stod(value);
      } else {
        throw fbms::ConfigError("config line " + std::to_string(lineno) +
                                ": unknown key '" + key + "'");
      }
    } catch (const fbms::ConfigError&) {
      throw;
    } catch (const std::exception&) {
      throw fbms::ConfigError("config line " + std::to_string(lineno) +
                              ": bad value for '" + key + "'");
    }
  }
}

void resolve_output_dir(fbms::RunConfig* cfg) {
  if (cfg->output_path.empty()) return;
  const char* dir = std::getenv("FBMS_OUTPUT_DIR");
  if (dir == nullptr || *dir == '\0') return;
  const std::filesystem::path p(cfg->output_path);
  if (p.is_absolute()) return;
  cfg->output_path = (std::filesystem::path(dir) / p).string();
}

void print_report(const fbms::VerificationReport& rep) {
  std::printf("suite: %s\n", rep.suite.c_str());
  for (const auto& c : rep.checks) {
    std::printf("  [%s] %-45s measured %- .6e  tolerance %- .6e\n",
                c.pass ? "PASS" : "FAIL", c.name.c_str(), c.measured, c.tolerance);
  }
  std::printf("summary: %d/%zu checks passed\n", rep.passed_count(),
              rep.checks.size());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free-boundary minimal surfaces, gradient images of degree-1 "
               "harmonic functions, and overdetermined cone problems"};
  app.require_subcommand(1);

  CliOptions opt;
  const std::map<std::string, fbms::Command> commands = {
      {"critical-catenoid", fbms::Command::kCriticalCatenoid},
      {"one-phase", fbms::Command::kOnePhase},
      {"herisson", fbms::Command::kHerisson},
      {"spectral", fbms::Command::kSpectral},
      {"verify-all", fbms::Command::kVerifyAll},
      {"export", fbms::Command::kExport},
  };

  for (const auto& [name, command] : commands) {
    const fbms::Command cmd = command;
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--grid", opt.cfg.grid_n, "grid size (>= 8)");
    sub->add_option("--out", opt.cfg.output_path, "output file path");
    sub->add_option("--format", opt.format, "obj | csv | json");
    sub->add_option("--tol", opt.tol_args, "tolerance override name=value");
    sub->add_option("--config", opt.config_file,
                    "key=value config file (overrides flags)");
    if (cmd == fbms::Command::kOnePhase) {
      sub->add_option("--kind", opt.kind, "halfspace | double_cone");
    }
    if (cmd == fbms::Command::kExport) {
      sub->add_option("--surface", opt.cfg.export_surface,
                      "critical-catenoid | catenoid | herisson | plane-disk");
    }
    if (cmd == fbms::Command::kSpectral) {
      sub->add_option("--kappa", opt.cfg.spectral_kappa, "Gaussian curvature > 0");
      sub->add_option("--theta0", opt.cfg.spectral_theta0, "cap polar radius");
    }
    if (cmd == fbms::Command::kHerisson) {
      sub->add_option("--A", opt.cfg.herisson_A, "P1 coefficient of a custom profile");
      sub->add_option("--B", opt.cfg.herisson_B, "Q1 coefficient of a custom profile");
      sub->add_option("--band-lo", opt.cfg.band_lo, "band: lower polar angle");
      sub->add_option("--band-hi", opt.cfg.band_hi, "band: upper polar angle");
    }
    sub->callback([&opt, cmd]() { opt.cfg.command = cmd; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // parse failures are config errors
  }

  try {
    apply_tol_args(opt.tol_args, &opt.cfg.tol);
    if (!opt.config_file.empty()) apply_config_file(opt.config_file, &opt);
    opt.cfg.format = fbms::parse_format(opt.format);
    opt.cfg.one_phase_kind = parse_kind(opt.kind);
    resolve_output_dir(&opt.cfg);

    const fbms::RunOutcome outcome = fbms::run(opt.cfg);
    if (opt.cfg.command != fbms::Command::kExport) print_report(outcome.report);
    for (const std::string& f : outcome.files_written) {
      std::printf("wrote %s\n", f.c_str());
    }
    return outcome.report.all_pass() ? 0 : 3;
  } catch (const fbms::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 1;
  } catch (const fbms::IoError& e) {
    std::fprintf(stderr, "i/o error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "verification aborted: %s\n", e.what());
    return 3;
  }
}
