#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"

namespace cmcflat::cli {
namespace {

namespace fs = std::filesystem;

const fs::path kGolden = CMCFLAT_GOLDEN_DIR;

bool updating() { return std::getenv("CMCFLAT_UPDATE_GOLDEN") != nullptr; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> tokens(const std::string& text) {
  std::string spaced = text;
  for (char& c : spaced)
    if (c == ',' || c == '[' || c == ']' || c == '{' || c == '}' || c == ':') c = ' ';
  std::istringstream in(spaced);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

// Token-wise comparison; numeric tokens may differ by rounding in the last
// digits (libm differences), everything else must match exactly.
::testing::AssertionResult same_modulo_rounding(const std::string& expected, const std::string& actual) {
  const auto a = tokens(expected), b = tokens(actual);
  if (a.size() != b.size())
    return ::testing::AssertionFailure() << "token count " << b.size() << " != " << a.size() << "\n" << actual;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    char* ea = nullptr;
    char* eb = nullptr;
    const double x = std::strtod(a[i].c_str(), &ea);
    const double y = std::strtod(b[i].c_str(), &eb);
    const bool numeric = *ea == '\0' && *eb == '\0';
    if (!numeric || std::abs(x - y) > 1e-12 + 1e-9 * std::abs(x))
      return ::testing::AssertionFailure() << "token " << i << ": expected " << a[i] << ", got " << b[i];
  }
  return ::testing::AssertionSuccess();
}

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  for (std::string& a : args) {
    const auto at = a.find("@in/");
    if (at != std::string::npos) a.replace(at, 4, (kGolden / "inputs").string() + "/");
  }
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

void check_golden(const std::string& name, const std::string& actual) {
  const fs::path path = kGolden / name;
  if (updating()) {
    write_atomic(path.string(), actual);
    return;
  }
  ASSERT_TRUE(fs::exists(path)) << "missing golden file " << path;
  EXPECT_TRUE(same_modulo_rounding(slurp(path), actual)) << name;
}

struct Case {
  std::string name;
  std::vector<std::string> args;
  int code;
};

void PrintTo(const Case& c, std::ostream* os) { *os << c.name; }

class GoldenStdout : public ::testing::TestWithParam<Case> {};

TEST_P(GoldenStdout, MatchesGolden) {
  const Case& c = GetParam();
  const CliResult r = run_cli(c.args);
  EXPECT_EQ(r.code, c.code) << r.err;
  check_golden(c.name + ".out", r.out);
}

INSTANTIATE_TEST_SUITE_P(
    Commands, GoldenStdout,
    ::testing::Values(
        Case{"construct_half_zero", {"construct", "--h", "0.5", "--rho", "0"}, kExitOk},
        Case{"construct_sasahara", {"construct", "--preset", "sasahara"}, kExitOk},
        Case{"construct_extend", {"construct", "--extend", "@in/s5_member.json"}, kExitOk},
        Case{"verify_sasahara", {"verify", "--params", "@in/sasahara.json", "--samples", "50", "--seed", "7"}, kExitOk},
        Case{"verify_broken", {"verify", "--params", "@in/broken.json", "--samples", "20", "--seed", "1"},
             kExitCheckFailed},
        Case{"lattice_sasahara", {"lattice", "--params", "@in/sasahara.json"}, kExitOk},
        Case{"lattice_quarter", {"lattice", "--a", "1/4", "--b", "1/4"}, kExitOk},
        Case{"lattice_q3", {"lattice", "--q", "3"}, kExitOk},
        Case{"torus_exists_half", {"torus-exists", "--h", "1/2"}, kExitOk},
        Case{"torus_exists_four_fifths", {"torus-exists", "--h", "4/5"}, kExitOk},
        Case{"torus_exists_none", {"torus-exists", "--h", "1/7", "--bound", "5"}, kExitOk},
        Case{"admissible_std2pi", {"admissible", "--lattice", "@in/std2pi.json", "--h", "1/2"}, kExitOk},
        Case{"admissible_sqrt5", {"admissible", "--lattice", "@in/sqrt5.json", "--h", "3/5"}, kExitOk}),
    [](const auto& info) { return info.param.name; });

TEST(Cli, ExportWritesGridMeshAndDomain) {
  const fs::path dir = fs::temp_directory_path() / "cmcflat_cli_export";
  fs::create_directories(dir);
  const std::string prefix = (dir / "grid").string();
  const CliResult r = run_cli({"export", "--params", "@in/sasahara.json", "--grid", "4", "3", "--projection", "coords",
                         "--out", prefix});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  check_golden("export_grid.csv", slurp(prefix + ".csv"));
  check_golden("export_grid.obj", slurp(prefix + ".obj"));
  check_golden("export_grid.domain.json", slurp(prefix + ".domain.json"));
  fs::remove_all(dir);
}

TEST(Cli, ExportCountsRowsAndFaces) {
  const fs::path dir = fs::temp_directory_path() / "cmcflat_cli_export_large";
  fs::create_directories(dir);
  const std::string prefix = (dir / "g").string();
  ASSERT_EQ(run_cli({"export", "--params", "@in/sasahara.json", "--grid", "64", "64", "--projection", "pca3",
                     "--seed", "3", "--out", prefix})
                .code,
            kExitOk);
  std::istringstream csv(slurp(prefix + ".csv"));
  std::string header;
  std::getline(csv, header);
  EXPECT_EQ(header, "x,y,psi_1,psi_2,psi_3,psi_4,psi_5,psi_6");
  std::size_t rows = 0;
  for (std::string line; std::getline(csv, line);) ++rows;
  EXPECT_EQ(rows, 4096u);
  std::istringstream obj(slurp(prefix + ".obj"));
  std::size_t v = 0, f = 0;
  for (std::string line; std::getline(obj, line);) {
    if (line.rfind("v ", 0) == 0) ++v;
    if (line.rfind("f ", 0) == 0) ++f;
  }
  EXPECT_EQ(v, 64u * 64u);
  EXPECT_EQ(f, 2u * 63u * 63u);
  fs::remove_all(dir);
}

TEST(Cli, VerifyIsDeterministic) {
  const auto a = run_cli({"verify", "--params", "@in/sasahara.json", "--samples", "30", "--seed", "5"});
  const auto b = run_cli({"verify", "--params", "@in/sasahara.json", "--samples", "30", "--seed", "5"});
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, BrokenWeightsNameBalance) {
  const CliResult r = run_cli({"verify", "--params", "@in/broken.json", "--samples", "20"});
  EXPECT_EQ(r.code, kExitCheckFailed);
  EXPECT_NE(r.err.find("miyata_balance"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"torus-exists", "--h", "0.5"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"lattice", "--a", "1/3", "--b", "1/4"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"export", "--params", "@in/sasahara.json", "--grid", "0", "3"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"verify", "--params", "@in/does_not_exist.json"}).code, kExitUsage);
  const CliResult r = run_cli({"construct", "--h", "0.5", "--rho", "1.2"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("rho <="), std::string::npos);
}

TEST(Cli, WritesOutputFileAtomically) {
  const fs::path dir = fs::temp_directory_path() / "cmcflat_cli_out";
  fs::create_directories(dir);
  const fs::path target = dir / "d.json";
  ASSERT_EQ(run_cli({"construct", "--preset", "sasahara", "--out", target.string()}).code, kExitOk);
  EXPECT_EQ(slurp(target), run_cli({"construct", "--preset", "sasahara"}).out);
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++files;
  EXPECT_EQ(files, 1u);
  fs::remove_all(dir);
}

}  // namespace
}  // namespace cmcflat::cli
