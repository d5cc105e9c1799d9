#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "berezin/fieldgrid.hpp"
#include "berezin/fieldio.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(BEREZIN_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  for (std::size_t k; (k = std::fread(buf, 1, sizeof buf, p)) > 0;) out.append(buf, k);
  const int raw = pclose(p);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("berezin_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

}  // namespace

TEST_F(Cli, MultiplierRows) {
  const auto r = cli("multiplier --m 0 --n 1 --lambda-max 8 --samples 3 --out " + path("f.csv"));
  ASSERT_EQ(r.status, 0);
  std::istringstream is(slurp(path("f.csv")));
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "lambda,f_m");
  const double want[3][2] = {{0, 1}, {4, std::exp(-1.0)}, {8, std::exp(-2.0)}};
  for (const auto& w : want) {
    ASSERT_TRUE(std::getline(is, line));
    double l, f;
    ASSERT_EQ(std::sscanf(line.c_str(), "%lf,%lf", &l, &f), 2);
    EXPECT_EQ(l, w[0]);
    EXPECT_NEAR(f, w[1], 1e-15);
  }
  const std::string meta = slurp(path("f.csv.meta.json"));
  EXPECT_NE(meta.find("\"--lambda-max\",\"8\""), std::string::npos) << meta;
}

TEST_F(Cli, ApplyHeatToGaussian) {
  ASSERT_EQ(cli("field gaussian --n 1 --points 256 --half-width 8 --output " + path("g.json")).status, 0);
  for (const char* method : {"spectral", "conv"}) {
    ASSERT_EQ(cli(std::string("apply --m 0 --method ") + method + " --input " + path("g.json") + " --output " + path("h.json")).status, 0);
    const auto f = berezin::fieldio::load_field(path("h.json"));
    double worst = 0.0;
    for (std::size_t p = 0; p < f.values.size(); ++p) {
      std::vector<int> idx(2);
      berezin::fieldgrid::unravel(f.grid, p, idx);
      const double x = f.grid.coordinate(idx[0]), y = f.grid.coordinate(idx[1]);
      worst = std::max(worst, std::abs(f.values[p] - 0.5 * std::exp(-0.5 * (x * x + y * y))));
    }
    EXPECT_LE(worst, 1e-8) << method;
  }
}

TEST_F(Cli, OutputsAreByteIdentical) {
  for (int k = 0; k < 2; ++k) {
    const std::string s = std::to_string(k);
    ASSERT_EQ(cli("multiplier --m 3 --n 2 --lambda-max 50 --samples 101 --out " + path("m" + s + ".csv")).status, 0);
    ASSERT_EQ(cli("field gaussian --points 64 --half-width 8 --output " + path("g" + s + ".json")).status, 0);
    ASSERT_EQ(cli("apply --m 2 --method conv --input " + path("g0.json") + " --output " + path("a" + s + ".json") +
                  " --slice-csv " + path("a" + s + ".csv"))
                  .status,
              0);
  }
  for (const char* stem : {"m%d.csv", "g%d.json", "a%d.json", "a%d.csv"}) {
    char a[32], b[32];
    std::snprintf(a, sizeof a, stem, 0);
    std::snprintf(b, sizeof b, stem, 1);
    EXPECT_EQ(slurp(path(a)), slurp(path(b))) << a;
  }
  EXPECT_FALSE(fs::exists(path("a0.json.tmp")));
}

TEST_F(Cli, VerifyTableIndependentOfJobs) {
  const auto a = cli("verify --suite identities --m-max 3 --jobs 1");
  const auto b = cli("verify --suite identities --m-max 3 --jobs 3");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("cases passed"), std::string::npos);
  EXPECT_EQ(cli("identities --m-max 2").status, 0);
}

TEST_F(Cli, KernelCsv) {
  const auto r = cli("kernel --m 0 --n 1 --z 0,0 --w 0,0 --w 1,0");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "w1_re,w1_im,b_m,K_re,K_im,e_re,e_im");
  // b_0(0) = 1/pi, K_0(0,0) = 1/pi, e_{0,0}(0) = pi^{-1/2}
  EXPECT_NE(r.out.find("0,0,0.31830988618379069,0.31830988618379069,0,0.56418958354775628,0"), std::string::npos) << r.out;
}

TEST_F(Cli, SpecfunEval) {
  EXPECT_EQ(cli("specfun eval --fn laguerre --degree 1 --alpha 0 --x 1").out, "0\n");
  EXPECT_EQ(cli("specfun eval --fn binomial --degree 2 --x 4").out, "6\n");
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(cli("").status, 2);
  EXPECT_EQ(cli("multiplier --m -1").status, 2);
  EXPECT_EQ(cli("multiplier --m 1 --n 9").status, 2);
  EXPECT_EQ(cli("verify --suite nothing").status, 2);
  EXPECT_EQ(cli("apply --m 0 --input " + path("missing.json") + " --output " + path("x.json")).status, 2);
  std::ofstream(path("bad.json")) << R"({"version":1,"n":1,"points_per_axis":8,"half_width":2})";
  EXPECT_EQ(cli("apply --m 0 --input " + path("bad.json") + " --output " + path("x.json")).status, 2);
  EXPECT_EQ(cli("field gaussian --n 3 --output " + path("x.json")).status, 2);
  ASSERT_EQ(cli("field gaussian --points 64 --half-width 3 --output " + path("narrow.json")).status, 0);
  EXPECT_EQ(cli("apply --m 4 --method conv --input " + path("narrow.json") + " --output " + path("x.json")).status, 2);
  EXPECT_FALSE(fs::exists(path("x.json")));
}

TEST_F(Cli, ParseErrorNamesKey) {
  std::ofstream(path("bad.json")) << R"({"version":1,"n":1,"points_per_axis":8,"half_width":2})";
  const std::string cmd = std::string(BEREZIN_CLI) + " apply --m 0 --input " + path("bad.json") + " --output " +
                          path("x.json") + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  char buf[512] = {};
  const std::size_t got = std::fread(buf, 1, sizeof buf - 1, p);
  buf[got] = 0;
  pclose(p);
  EXPECT_NE(std::string(buf).find("'values'"), std::string::npos) << buf;
}
