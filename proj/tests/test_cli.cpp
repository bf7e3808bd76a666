#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("dunkl_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  int run(const std::string& args) {
    const std::string cmd = std::string(DUNKL_LAB) + " " + args + " > " + (dir_ / "stdout.txt").string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string read(const std::string& name) {
    std::ifstream in(dir_ / name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  std::string out() const { return (dir_ / "out").string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run(""), 2);
  EXPECT_EQ(run("frobnicate"), 2);
  EXPECT_EQ(run("info --bogus"), 2);
  EXPECT_EQ(run("info --config " + write("v2.json", R"({"version": 2})")), 2);
  EXPECT_EQ(run("info --config " + write("unknown.json", R"({"version": 1, "extra": {}})")), 2);
  EXPECT_EQ(run("info --config " + (dir_ / "missing.json").string()), 2);
  EXPECT_EQ(run("verify --suite nope --out " + out()), 2);
  EXPECT_EQ(run("transform --out " + out()), 2);
  EXPECT_EQ(run("sweep --out " + out()), 2);
}

TEST_F(Cli, HelpExitsZero) { EXPECT_EQ(run("--help"), 0); }

TEST_F(Cli, InfoPrintsLines) {
  EXPECT_EQ(run("info --out " + out()), 0);
  EXPECT_NE(read("stdout.txt").find("p=2.000000 q=6.000000"), std::string::npos);
  EXPECT_NE(read("out/info.csv").find("q1,2,6"), std::string::npos);
}

TEST_F(Cli, VerifyWritesReportAndFailsOnTightTolerance) {
  EXPECT_EQ(run("verify --suite bessel --out " + out()), 0);
  const auto report = nlohmann::json::parse(read("out/report.json"));
  ASSERT_TRUE(report.is_array());
  ASSERT_FALSE(report.empty());
  for (const auto& r : report) {
    EXPECT_TRUE(r.contains("check") && r.contains("residual") && r.contains("tolerance") && r.contains("pass"));
    EXPECT_TRUE(r["pass"].get<bool>());
  }
  const auto cfg = write("tight.json", R"({"version": 1, "verify": {"tolerance_override": 1e-30}})");
  EXPECT_EQ(run("verify --suite bessel --config " + cfg + " --out " + out()), 1);
}

TEST_F(Cli, TransformRoundTrip) {
  std::string csv = "r,re,im\n";
  for (int i = 0; i <= 600; ++i) {
    const double r = 0.02 * i;
    std::ostringstream row;
    row.precision(17);
    row << r << "," << std::exp(-0.5 * r * r) << ",0\n";
    csv += row.str();
  }
  const auto input = write("in.csv", csv);
  const auto cfg = write("t.json", R"({"version": 1, "geometry": {"n": 2, "gamma": 0.5}, "transform": {"input": ")" + input + R"("}})");
  ASSERT_EQ(run("transform --config " + cfg + " --out " + out()), 0);
  std::istringstream in(read("out/transform.csv"));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "r,re,im");
  double worst = 0.0;
  while (std::getline(in, line)) {
    double r, re, im;
    char c1, c2;
    std::istringstream(line) >> r >> c1 >> re >> c2 >> im;
    worst = std::max(worst, std::abs(re - std::exp(-0.5 * r * r)) + std::abs(im));
  }
  EXPECT_LT(worst, 1e-6);
}

TEST_F(Cli, PropagateNamesFilesByTime) {
  const auto cfg = write("p.json", R"({"version": 1, "propagate": {"f": {"kind": "gaussian"}, "t_list": [0.5, 2]}})");
  ASSERT_EQ(run("propagate --config " + cfg + " --out " + out()), 0);
  EXPECT_TRUE(fs::exists(dir_ / "out" / "u_t0.500000.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "out" / "u_t2.000000.csv"));
  const auto r1 = write("r1.json", R"({"version": 1, "geometry": {"n": 1, "gamma": 1}, "propagate": {"g": {"kind": "bump", "radius": 2}, "t_list": [1]}})");
  ASSERT_EQ(run("propagate --config " + r1 + " --out " + out()), 0);
  EXPECT_EQ(read("out/u_t1.000000.csv").rfind("x,re,im\n-", 0), 0u);
}

TEST_F(Cli, PropagateBeyondTheGridIsANumericalEnvelopeError) {
  const auto cfg = write("p.json", R"({"version": 1, "propagate": {"f": {"kind": "gaussian"}, "t_list": [200]}})");
  EXPECT_EQ(run("propagate --config " + cfg + " --out " + out()), 3);
}

TEST_F(Cli, SweepVerdicts) {
  const auto ok = write("s.json", R"({"version": 1, "sweep": {"kind": "s_alpha", "alpha": 1, "case": "c-i", "p": 2, "q": 6}})");
  ASSERT_EQ(run("sweep --config " + ok + " --out " + out()), 0);
  EXPECT_NE(read("stdout.txt").find("verdict bounded"), std::string::npos);
  EXPECT_EQ(read("out/sweep.csv").rfind("p,q,family,lambda,t,ratio\n", 0), 0u);
  const auto probe = write("probe.json", R"({"version": 1, "sweep": {"kind": "s_alpha", "alpha": 1, "case": "c-i", "p": 2, "q": 15}})");
  EXPECT_EQ(run("sweep --config " + probe + " --out " + out()), 2);
  ASSERT_EQ(run("sweep --expect-growth --config " + probe + " --out " + out()), 0);
  EXPECT_NE(read("stdout.txt").find("verdict growing"), std::string::npos);
}
