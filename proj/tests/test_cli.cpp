#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI with stderr discarded; returns exit status and stdout.
Run cli(const std::string& args) {
  const std::string cmd = std::string(SPARSEMUL_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::size_t lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST(Cli, CountJson) {
  const auto r = cli("count --degrees 2,3,5 -t 5 --format json");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["exact_count"], 7117650);
  EXPECT_EQ(j["oracle"], 7117650);
  EXPECT_EQ(j["agree"], true);
}

TEST(Cli, CountText) {
  const auto r = cli("count --degrees 2 -t 5");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("exact_count: 0 "), std::string::npos);
  const auto big = cli("count --degrees 2,3,5,7 -t 5");
  ASSERT_EQ(big.status, 0);
  EXPECT_NE(big.out.find("oracle: skipped"), std::string::npos);
}

TEST(Cli, CountCsv) {
  const auto r = cli("count --degrees 2,3 -t 5 --format csv");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "degrees;t;exact;lower_bound;route;oracle;agree\n2,3;5;155;0;closed_form_pair;155;true\n");
}

TEST(Cli, Least) {
  const auto r = cli("least --poly \"x^4+x+1\" --poly \"x^9+x^6+x^4+x^3+1\" -t 5");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "x^19+x^17+x^8+x^4+1 (degree 19)\n");
  const auto hex = cli("least --poly 0x13 --poly 0x259 -t 5");
  EXPECT_EQ(hex.out, r.out);
}

TEST(Cli, Enumerate) {
  const auto r = cli("enumerate --degrees 5 -t 5");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(lines(r.out), 840u);
  const auto capped = cli("enumerate --degrees 2,3 -t 3 --format json");
  ASSERT_EQ(capped.status, 0);
  EXPECT_EQ(nlohmann::json::parse(capped.out).size(), 6u);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("count --poly \"x^4+y\" -t 4").status, 2);
  EXPECT_EQ(cli("count --degrees 2,x -t 4").status, 2);
  EXPECT_EQ(cli("count --degrees 2,3 -t 4 --format xml").status, 2);
  EXPECT_EQ(cli("count --degrees 2,3").status, 2);
  EXPECT_EQ(cli("bogus").status, 2);
  EXPECT_EQ(cli("count --degrees 2,4 -t 4").status, 3);
  EXPECT_EQ(cli("count --poly \"x^4+x^3+x^2+x+1\" -t 4").status, 3);
  EXPECT_EQ(cli("enumerate --degrees 11 -t 3 --max-e 100").status, 4);
  EXPECT_EQ(cli("least --degrees 4,9 -t 5 --max-degree 18").status, 4);
}

TEST(Cli, DeterministicJson) {
  const auto a = cli("count --degrees 2,3,5 -t 4 --format json");
  const auto b = cli("count --degrees 2,3,5 -t 4 --format json");
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, EstimateJson) {
  const auto r = cli("estimate --poly \"x^5+x^4+x^3+x^2+1\" --poly \"x^7+x+1\" -t 5 --observe --format json");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["refined_c"], 20);
  EXPECT_EQ(j["observed_least_degree"], 22);
  const auto raw = cli("estimate --count 1 --exponent 217 --total-degree 8 -t 4 --format json");
  ASSERT_EQ(raw.status, 0);
  EXPECT_NEAR(nlohmann::json::parse(raw.out)["crude_c"].get<double>(), 6.3496, 1e-3);
}

TEST(Cli, ConjectureJson) {
  const auto r = cli(
      "conjecture --poly \"x^4+x+1\" --poly \"x^5+x^4+x^3+x^2+1\" --poly \"x^9+x^8+x^6+x^5+1\" -t 4 --format json");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdict"], "counterexample");
  EXPECT_EQ(j["least_multiple"], "x^135+x^92+x^47+1");
  EXPECT_EQ(j["collisions"][0]["v"], 2);
  EXPECT_EQ(j["collisions"][0]["w"], 3);
  EXPECT_EQ(j["collisions"][0]["residue"], 2);
}

TEST(Cli, Selftest) {
  const auto r = cli("selftest");
  EXPECT_EQ(r.status, 0);
  std::istringstream in(r.out);
  std::string line;
  int pass = 0;
  while (std::getline(in, line)) pass += line.rfind("PASS", 0) == 0;
  EXPECT_EQ(pass, 7);
}
