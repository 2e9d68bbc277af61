#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gtest/gtest.h"

namespace {

struct Result {
  int status;
  std::string out;
};

// Runs the CLI with stderr merged into stdout.
Result run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "\"" SUPERCAT_CLI_PATH "\" " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(CliTest, Counts) {
  EXPECT_EQ(run("count super --m 2 --n 5").out, "36\n");
  EXPECT_EQ(run("count catalan --n 0").out, "1\n");
  EXPECT_EQ(run("count catalan --n 10").out, "16796\n");
  EXPECT_EQ(run("count pairs --n 4 --diff 1").out, "14\n");
  EXPECT_EQ(run("count ballot --steps 8 --max-height 2").out, "8\n");
  EXPECT_EQ(run("count ballot --steps 4 --end 2 --exact-height 2").out, "2\n");
  EXPECT_EQ(run("count ballot --steps 3 --start 1 --end 2 --max-height 3").out, "3\n");
  EXPECT_EQ(run("count super --m 0 --n 0").status, 1);
}

TEST(CliTest, Enumerate) {
  EXPECT_EQ(run("enumerate dyck --n 2").out, "UUDD\nUDUD\n");
  EXPECT_EQ(run("enumerate ballot --steps 4 --end 2 --exact-height 2").out, "UUDU\nUDUU\n");
}

TEST(CliTest, Table) {
  EXPECT_EQ(run("table --m 2 --nmax 10").out, "3 2 3 6 14 36 99 286 858 2652 8398\n");
  EXPECT_EQ(run("table --m 3 --nmax 10").out, "10 5 6 10 20 45 110 286 780 2210 6460\n");
  const Result zero = run("table --m 0 --nmax 4", "");
  EXPECT_EQ(zero.status, 0);
  EXPECT_NE(zero.out.find("1 2 6 20 70\n"), std::string::npos);
}

TEST(CliTest, VerifyText) {
  const Result r = run("verify t3-main --order 20");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(r.out.rfind("PASS t3-main order=20", 0), 0u) << r.out;
  const Result all = run("verify all --order 30");
  EXPECT_EQ(all.status, 0) << all.out;
  EXPECT_NE(all.out.find("all identities passed"), std::string::npos);
}

TEST(CliTest, VerifyJsonIsCanonical) {
  const Result r = run("verify e8 --order 10 --format json");
  ASSERT_EQ(r.status, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("identity"), "e8");
  EXPECT_EQ(j.at("passed"), true);
  EXPECT_EQ(j.dump(2) + "\n", r.out);
}

TEST(CliTest, VerifyOrderFromEnvironment) {
  const Result r = run("verify e2 --format json", "SUPERCAT_ORDER=5");
  ASSERT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(nlohmann::json::parse(r.out).at("order"), 5);
}

TEST(CliTest, VerifyWritesFile) {
  const auto path = std::filesystem::temp_directory_path() / "supercat_cli_test_report.json";
  std::filesystem::remove(path);
  ASSERT_EQ(run("verify pairsum --order 8 --format json --out " + path.string()).status, 0);
  EXPECT_EQ(nlohmann::json::parse(slurp(path)).at("identity"), "pairsum");
  std::filesystem::remove(path);
}

TEST(CliTest, VerifyErrors) {
  EXPECT_NE(run("verify e2 --order 0").status, 0);
  EXPECT_NE(run("verify e2 --order 201").status, 0);
  const Result unknown = run("verify bogus");
  EXPECT_EQ(unknown.status, 2);
  EXPECT_NE(unknown.out.find("valid ids"), std::string::npos);
}

TEST(CliTest, Bijection) {
  EXPECT_EQ(run("bijection --forward UD UD").out, "UUDD\n");
  EXPECT_EQ(run("bijection --forward UD \"\"").out, "UD\n");
  EXPECT_EQ(run("bijection --inverse UUDD").out, "(UD, UD)\n");
  EXPECT_EQ(run("bijection --inverse UD").out, "(UD, ε)\n");
  const Result bad = run("bijection --forward UUDD \"\"");
  EXPECT_EQ(bad.status, 1);
  EXPECT_NE(bad.out.find("h(P) <= h(Q)+1 violated"), std::string::npos);
  EXPECT_EQ(run("bijection").status, 2);
  EXPECT_EQ(run("bijection --inverse UDD").status, 1);
}

TEST(CliTest, BijectionJsonAndSvg) {
  const Result j = run("bijection --forward UUDD UD --format json");
  ASSERT_EQ(j.status, 0);
  EXPECT_EQ(nlohmann::json::parse(j.out).at("output"), "UUDUDD");
  const auto path = std::filesystem::temp_directory_path() / "supercat_cli_test.svg";
  std::filesystem::remove(path);
  ASSERT_EQ(run("bijection --forward UUDD UD --svg " + path.string()).status, 0);
  const std::string svg = slurp(path);
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  std::filesystem::remove(path);
}
