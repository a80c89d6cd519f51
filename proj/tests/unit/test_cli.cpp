#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "oracles.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string err;
};

fs::path scratch(const std::string& name) {
  const auto dir = fs::path(testing::TempDir()) / ("mfunc_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Run mfunc_cli(const std::string& args, const fs::path& dir) {
  const auto err = dir / "stderr.txt";
  const std::string cmd = std::string(MFUNC_CLI_PATH) + " " + args + " 2> " + err.string() + " > /dev/null";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(err)};
}

json report(const fs::path& dir) { return json::parse(slurp(dir / "report.json")); }

}  // namespace

TEST(Cli, SymPowerIdentityHolds) {
  const auto dir = scratch("sympow");
  const auto r = mfunc_cli("sympow-identity --set mu=3 --out " + dir.string(), dir);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rep = report(dir);
  EXPECT_EQ(rep["schema"], "mfunc.report/1");
  EXPECT_EQ(rep["experiment"], "sympow-identity");
  EXPECT_LT(rep["outputs"]["max_deviation"].get<double>(), 1e-12);
  EXPECT_EQ(rep["outputs"]["nu"], 1);
  // one row per prime up to 100, header first
  const auto csv = slurp(dir / "identity.csv");
  EXPECT_EQ(csv.substr(0, csv.find("\r\n")), "p,difference_re,difference_im,endpoint_re,endpoint_im,deviation");
  std::size_t rows = 0;
  for (std::size_t at = 0; (at = csv.find("\r\n", at)) != std::string::npos; at += 2) ++rows;
  EXPECT_EQ(rows - 1, oracle::trial_division_primes(100).size());
}

TEST(Cli, ErrorKindsMapToExitCodes) {
  const auto dir = scratch("errors");
  auto r = mfunc_cli("density --set primes=first:2 --out " + dir.string(), dir);
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(json::parse(r.err)["error"]["kind"], "method");

  r = mfunc_cli("density --set no_such_key=1 --out " + dir.string(), dir);
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(json::parse(r.err)["error"]["kind"], "config");

  r = mfunc_cli("density --set sigma=\\\"high\\\" --out " + dir.string(), dir);
  EXPECT_EQ(r.code, 2);

  r = mfunc_cli("density --set sigma=0.4 --out " + dir.string(), dir);
  EXPECT_EQ(r.code, 3);

  r = mfunc_cli("pf-census --set X=100000000 --out " + dir.string(), dir);
  EXPECT_EQ(r.code, 4);

  r = mfunc_cli("chi-tau --tolerance bogus=1 --out " + dir.string(), dir);
  EXPECT_EQ(r.code, 2);

  r = mfunc_cli("no-such-experiment", dir);
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, StochasticRunsNeedSeed) {
  const auto dir = scratch("seed");
  const auto r = mfunc_cli("bohr-jessen --set T=100 --out " + dir.string(), dir);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("seed"), std::string::npos);
}

TEST(Cli, ConfigFileLayering) {
  const auto dir = scratch("layers");
  {
    std::ofstream cfg(dir / "cfg.json");
    cfg << R"({"experiment": "pf-census", "epsilon": 0.3, "X": 500})";
  }
  auto r = mfunc_cli("pf-census --config " + (dir / "cfg.json").string() + " --set X=200 --out " + dir.string(), dir);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rep = report(dir);
  EXPECT_EQ(rep["config"]["X"], 200);
  EXPECT_DOUBLE_EQ(rep["config"]["epsilon"].get<double>(), 0.3);
  EXPECT_EQ(rep["outputs"]["primes"], oracle::trial_division_primes(200).size());

  {
    std::ofstream cfg(dir / "other.json");
    cfg << R"({"experiment": "density"})";
  }
  r = mfunc_cli("pf-census --config " + (dir / "other.json").string() + " --out " + dir.string(), dir);
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, CensusCsvMatchesThreshold) {
  const auto dir = scratch("census");
  ASSERT_EQ(mfunc_cli("pf-census --set X=1000 --out " + dir.string(), dir).code, 0);
  std::istringstream csv(slurp(dir / "census.csv"));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "p,lambda,in_Pf,abs_lambda\r");
  std::size_t members = 0, rows = 0;
  while (std::getline(csv, line)) {
    std::stringstream fields(line);
    std::string p, lambda, in, abs_lambda;
    std::getline(fields, p, ',');
    std::getline(fields, lambda, ',');
    std::getline(fields, in, ',');
    std::getline(fields, abs_lambda, '\r');
    ++rows;
    const bool member = std::stod(abs_lambda) > std::sqrt(2.0) - 0.1;
    EXPECT_EQ(in, member ? "true" : "false") << "p = " << p;
    members += member;
  }
  EXPECT_EQ(rows, oracle::trial_division_primes(1000).size());
  EXPECT_EQ(report(dir)["outputs"]["members"], members);
}

TEST(Cli, SeededRunsAreReproducible) {
  const auto a = scratch("det_a"), b = scratch("det_b");
  const std::string args = "density --seed 11 --set primes=first:10 --set resolution=64 --set oracle_samples=20000 "
                           "--set panel_size=10 --out ";
  ASSERT_EQ(mfunc_cli(args + a.string(), a).code, 0);
  ASSERT_EQ(mfunc_cli(args + b.string(), b).code, 0);
  auto ra = report(a), rb = report(b);
  ra.erase("wall_time_s");
  rb.erase("wall_time_s");
  EXPECT_EQ(ra, rb);
  for (const auto& f : ra["files"]) EXPECT_EQ(slurp(a / f.get<std::string>()), slurp(b / f.get<std::string>())) << f;
}

TEST(Cli, GaussianInversionReport) {
  const auto dir = scratch("gauss");
  ASSERT_EQ(mfunc_cli("invert --set source=gaussian --set gaussian_width=0.7 --out " + dir.string(), dir).code, 0);
  const auto rep = report(dir);
  EXPECT_LT(rep["oracle"]["max_cell_error"].get<double>(), 1e-10);
  EXPECT_NEAR(rep["outputs"]["mass"].get<double>(), 1.0, 1e-10);
}
