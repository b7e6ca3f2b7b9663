// Integration tests spawning the built CLI binary: exit codes, file outputs,
// determinism, config-file precedence.

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef FBMS_CLI_PATH
#error "FBMS_CLI_PATH must be defined"
#endif

namespace {

namespace fs = std::filesystem;

int run_cli(const std::string& args) {
  const std::string cmd = std::string(FBMS_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path temp_dir() {
  const fs::path dir = fs::temp_directory_path() / "fbms_cli_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST(Cli, CriticalCatenoidPasses) {
  EXPECT_EQ(run_cli("critical-catenoid --grid 16"), 0);
}

TEST(Cli, SpectralPasses) { EXPECT_EQ(run_cli("spectral --grid 32"), 0); }

TEST(Cli, ConfigErrorsExitOne) {
  EXPECT_EQ(run_cli("critical-catenoid --grid 4"), 1);
  EXPECT_EQ(run_cli("no-such-command"), 1);
  EXPECT_EQ(run_cli("one-phase --kind nonsense"), 1);
  EXPECT_EQ(run_cli("verify-all --tol free-boundary=abc"), 1);
  EXPECT_EQ(run_cli("export --format obj --grid 12"), 1);  // no --out
}

TEST(Cli, IoErrorsExitTwo) {
  EXPECT_EQ(run_cli("export --surface catenoid --format obj --grid 12 "
                    "--out /proc/fbms_forbidden/out.obj"),
            2);
}

TEST(Cli, VerificationFailureExitsThree) {
  // absurd tolerance forces a failing check
  EXPECT_EQ(run_cli("critical-catenoid --grid 16 --tol free-boundary=1e-300"), 3);
}

TEST(Cli, OnePhaseCsvBoundaryRows) {
  const fs::path out = temp_dir() / "one_phase.csv";
  ASSERT_EQ(run_cli("one-phase --kind double_cone --format csv --grid 16 --out " +
                    out.string()),
            0);
  std::ifstream in(out);
  ASSERT_TRUE(in.good());
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "theta,g,g_prime,|grad v|");
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<double> row;
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    ASSERT_EQ(row.size(), 4u);
    rows.push_back(row);
  }
  ASSERT_EQ(rows.size(), 17u);  // grid + 1 rows, endpoints included
  // boundary rows have |grad v| = 1 and g = 0
  for (const auto& row : {rows.front(), rows.back()}) {
    EXPECT_NEAR(row[3], 1.0, 1e-10);
    EXPECT_NEAR(row[1], 0.0, 1e-12);
  }
  fs::remove(out);
}

TEST(Cli, VerifyAllByteIdenticalJson) {
  const fs::path out1 = temp_dir() / "report1.json";
  const fs::path out2 = temp_dir() / "report2.json";
  ASSERT_EQ(run_cli("verify-all --grid 8 --out " + out1.string()), 0);
  ASSERT_EQ(run_cli("verify-all --grid 8 --out " + out2.string()), 0);
  const std::string a = slurp(out1);
  const std::string b = slurp(out2);
  ASSERT_FALSE(a.empty());
  EXPECT_EQ(a, b);
  fs::remove(out1);
  fs::remove(out2);
}

TEST(Cli, ConfigFileOverridesFlags) {
  const fs::path dir = temp_dir();
  const fs::path cfg = dir / "run.cfg";
  {
    std::ofstream out(cfg);
    out << "# comment line\n";
    out << "grid_n=8\n";
    out << "tol.free-boundary=1e-300\n";  // forces a failure regardless of flags
  }
  EXPECT_EQ(run_cli("critical-catenoid --grid 16 --config " + cfg.string()), 3);
  {
    std::ofstream out(cfg);
    out << "bogus_key=1\n";
  }
  EXPECT_EQ(run_cli("critical-catenoid --config " + cfg.string()), 1);
  fs::remove(cfg);
}

TEST(Cli, OutputDirEnvironmentVariable) {
  const fs::path dir = temp_dir() / "envout";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string cmd = std::string("FBMS_OUTPUT_DIR=") + dir.string() + " " +
                          FBMS_CLI_PATH +
                          " export --surface catenoid --format obj --grid 12 "
                          "--out cat.obj > /dev/null 2>&1";
  ASSERT_EQ(WEXITSTATUS(std::system(cmd.c_str())), 0);
  EXPECT_TRUE(fs::exists(dir / "cat.obj"));
  fs::remove_all(dir);
}

TEST(Cli, ExportObjDeterministic) {
  const fs::path out1 = temp_dir() / "h1.obj";
  const fs::path out2 = temp_dir() / "h2.obj";
  ASSERT_EQ(run_cli("export --surface herisson --format obj --grid 16 --out " +
                    out1.string()),
            0);
  ASSERT_EQ(run_cli("export --surface herisson --format obj --grid 16 --out " +
                    out2.string()),
            0);
  EXPECT_EQ(slurp(out1), slurp(out2));
  fs::remove(out1);
  fs::remove(out2);
}

TEST(Cli, CustomHerissonProfile) {
  EXPECT_EQ(run_cli("herisson --grid 16 --A 1.0 --B 0.5 --band-lo 0.8 --band-hi 2.3"),
            0);
  // a linear profile's image collapses to a point: no regular samples
  EXPECT_EQ(run_cli("herisson --grid 16 --A 1.0 --B 0.0"), 3);
  // band outside the sphere's polar range is a config error
  EXPECT_EQ(run_cli("herisson --grid 16 --A 1.0 --B 0.5 --band-lo 0.5 --band-hi 9"), 1);
}
