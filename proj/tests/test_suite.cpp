#include "qgw/suite.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>

namespace qgw {
namespace {

namespace fs = std::filesystem;

TEST(Config, Ranges) {
  EXPECT_EQ(IntRange::parse("3").hi, 3);
  const auto r = IntRange::parse("2..4");
  EXPECT_EQ(r.lo, 2);
  EXPECT_EQ(r.hi, 4);
  EXPECT_EQ(r.to_string(), "2..4");
  EXPECT_THROW(IntRange::parse("4..2"), ConfigError);
  EXPECT_THROW(IntRange::parse("x"), ConfigError);
}

TEST(Config, TextFormat) {
  SuiteConfig c;
  apply_config_text(c, "# comment\nn = 2..3\nN=4\nrules = merge, serre\nformat = json\nseed = 99\n");
  EXPECT_EQ(c.n.hi, 3);
  EXPECT_EQ(c.N.lo, 4);
  EXPECT_EQ(c.rules, (std::vector<Rule>{Rule::merge, Rule::serre}));
  EXPECT_TRUE(c.json);
  EXPECT_EQ(c.seed, 99u);
  EXPECT_THROW(apply_config_text(c, "colour = blue\n"), ConfigError);
  EXPECT_THROW(apply_config_text(c, "rules = sideways\n"), ConfigError);
  EXPECT_THROW(apply_config_text(c, "just words\n"), ConfigError);
}

TEST(Config, Validation) {
  SuiteConfig c;
  c.n = {3, 7};
  EXPECT_THROW(c.validate(), ConfigError);
  c.limits.max_n = 7;
  EXPECT_NO_THROW(c.validate());
  c = {};
  c.graph = "A3";
  EXPECT_THROW(c.validate(), ConfigError);  // A3 needs n = 4
  c.n = {4, 4};
  EXPECT_NO_THROW(c.validate());
  c.graph = "no-such-graph";
  EXPECT_THROW(c.validate(), ConfigError);
  c = {};
  c.jobs = 0;
  EXPECT_THROW(c.validate(), ConfigError);
}

TEST(Suite, ConventionStore) {
  const auto dir = fs::temp_directory_path() / "qgw_test_convention";
  fs::remove_all(dir);
  EXPECT_FALSE(load_convention(dir).has_value());
  const GradingConvention conv{-1, 0, -1, -1, -1, 1};
  store_convention(dir, conv);
  EXPECT_EQ(load_convention(dir), conv);
  fs::remove_all(dir);
}

TEST(Suite, NegativeControlInverts) {
  VerificationReport inner;
  inner.check = "x";
  EXPECT_EQ(negative_control(inner).status, Status::fail);
  EXPECT_TRUE(negative_control(inner).counterexample.has_value());
  inner.fail({"w", {}, {}, "boom"});
  const auto ok = negative_control(inner);
  EXPECT_EQ(ok.status, Status::pass);
  EXPECT_EQ(ok.check, "negative_control.x");
}

SuiteConfig small_config() {
  SuiteConfig c;
  c.n = {2, 3};
  c.N = {2, 2};
  c.rewrite_samples = 30;
  c.confluence_samples = 10;
  c.poly_degree = 4;
  return c;
}

TEST(Suite, RunsAndSerializes) {
  auto c = small_config();
  const auto reports = run_suite(c);
  ASSERT_FALSE(reports.empty());
  for (const auto& r : reports) {
    EXPECT_EQ(r.status, Status::pass) << report_to_text(r);
    const auto j = nlohmann::json::parse(report_to_json(r, c.seed));
    for (const char* key : {"check", "citation", "params", "convention", "status",
                            "counterexample_weight", "millis", "seed"})
      EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_FALSE(nlohmann::json::parse(report_to_json(r, c.seed, false)).contains("millis"));
  }
  for (std::size_t k = 1; k < reports.size(); ++k)
    EXPECT_LE(reports[k - 1].sort_key(), reports[k].sort_key());
}

TEST(Suite, JobsDoNotChangeReports) {
  auto c = small_config();
  const auto serial = run_suite(c);
  c.jobs = 4;
  const auto parallel = run_suite(c);
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t k = 0; k < serial.size(); ++k)
    EXPECT_EQ(report_to_json(serial[k], 1, false), report_to_json(parallel[k], 1, false));
}

TEST(Suite, FailingReportCarriesCounterexample) {
  auto c = small_config();
  c.search_bound = 0;
  bool saw_failure = false;
  for (const auto& r : run_suite(c))
    if (r.status == Status::fail) {
      saw_failure = true;
      EXPECT_TRUE(r.counterexample.has_value()) << r.check;
      EXPECT_NE(report_to_json(r, 1).find("\"counterexample\":{"), std::string::npos);
    }
  EXPECT_TRUE(saw_failure);
}

TEST(Suite, NonTypeAGraphSkipsModuleChecks) {
  SuiteConfig c;
  c.graph = "D4";
  c.n = {3, 3};
  c.N = {2, 2};
  c.rewrite_samples = 20;
  c.poly_degree = 3;
  int skipped = 0;
  for (const auto& r : run_suite(c)) {
    EXPECT_NE(r.status, Status::fail) << report_to_text(r);
    skipped += r.status == Status::skipped;
  }
  EXPECT_EQ(skipped, 2);
}

// CLI exit codes and output, through the real binary.
struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(QGW_CLI) + " " + args + " 2>&1";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::string out;
  std::array<char, 4096> buf{};
  while (auto n = fread(buf.data(), 1, buf.size(), pipe.get())) out.append(buf.data(), n);
  const int status = pclose(pipe.release());
  return {WEXITSTATUS(status), out};
}

TEST(Cli, RewriteExamples) {
  auto r = run("rewrite \"E1 E1\" @ \"(2,1)\" --graph A1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "(1*q^-1 + 1*q^1) * E1^(2)\n");
  r = run("rewrite \"E1 F1\" @ \"(0,2)\" --graph A1 --oracle 2 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("oracle: equal"), std::string::npos);
  r = run("rewrite \"E1 Q1\" @ \"(0,2)\"");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("token 2"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  const auto cache = (fs::temp_directory_path() / "qgw_test_cli_cache").string();
  fs::remove_all(cache);
  EXPECT_EQ(run("verify --n 2 --N 2 --samples 20 --cache-dir " + cache).code, 0);
  EXPECT_EQ(run("verify --n 2 --N 2 --search-bound 0 --cache-dir " + cache).code, 1);
  EXPECT_EQ(run("verify --graph nowhere.graph").code, 2);
  EXPECT_EQ(run("verify --n 9").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("derive-convention --search-bound 0 --cache-dir " + cache).code, 1);
  const auto d = run("derive-convention --q-one --cache-dir " + cache);
  EXPECT_EQ(d.code, 0);
  EXPECT_NE(d.out.find("q=1 baseline (gamma = 0): pass"), std::string::npos);
  EXPECT_NE(d.out.find("chosen: c1=-1 c2=0"), std::string::npos);
  EXPECT_TRUE(fs::exists(fs::path(cache) / "convention.json"));
  EXPECT_NE(run("cache stats --cache-dir " + cache).out.find("matrix files:"), std::string::npos);
  EXPECT_EQ(run("cache clear --cache-dir " + cache).code, 0);
  EXPECT_FALSE(fs::exists(fs::path(cache) / "convention.json"));
  fs::remove_all(cache);
}

TEST(Cli, ConfigFileIsOverriddenByFlags) {
  const auto path = fs::temp_directory_path() / "qgw_test.conf";
  std::ofstream(path) << "n = 9\n";
  EXPECT_EQ(run("verify --no-cache --config " + path.string()).code, 2);
  EXPECT_EQ(run("verify --no-cache --samples 10 --N 1 --n 2 --config " + path.string()).code, 0);
  fs::remove(path);
}

}  // namespace
}  // namespace qgw
