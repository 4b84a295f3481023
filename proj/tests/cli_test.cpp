#include "lyubgraph/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "lyubgraph/io.hpp"

namespace lyubgraph {
namespace {

const std::filesystem::path kFixtures = LYUBGRAPH_FIXTURES;
const std::filesystem::path kGolden = LYUBGRAPH_GOLDEN;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "lyubgraph");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return (kFixtures / name).string(); }

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct GoldenCase {
  std::string golden;
  std::vector<std::string> args;
};

void PrintTo(const GoldenCase& c, std::ostream* os) { *os << c.golden; }

class GoldenTest : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(GoldenTest, MatchesGolden) {
  const auto& c = GetParam();
  std::vector<std::string> args = c.args;
  args[1] = fixture(args[1]);
  const auto r = run(args);
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(r.out, read_file(kGolden / c.golden));
}

INSTANTIATE_TEST_SUITE_P(
    Cli, GoldenTest,
    ::testing::Values(GoldenCase{"a6_analyze.json", {"analyze", "a6.json", "--json"}},
                      GoldenCase{"a6_analyze.md", {"analyze", "a6.json", "--md"}},
                      GoldenCase{"a9q_analyze.json", {"analyze", "a9q.json"}},
                      GoldenCase{"a9q_analyze.md", {"analyze", "a9q.json", "--md"}},
                      GoldenCase{"a6_gamma2.dot", {"gamma", "a6.json", "--t", "2", "--dot"}},
                      GoldenCase{"a6_conn.json", {"conn", "a6.json", "--oracle"}},
                      GoldenCase{"a6_section.json", {"section", "a6.json", "--check"}},
                      GoldenCase{"surfaces_point_proj.md",
                                 {"proj", "surfaces_point.json", "--md"}}),
    [](const auto& info) {
      std::string name = info.param.golden;
      for (auto& ch : name)
        if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
      return name;
    });

TEST(CliTest, AnalyzeIsDeterministic) {
  for (const auto& entry : std::filesystem::directory_iterator(kFixtures)) {
    if (entry.path().filename() == "surfaces_point.json") continue;
    const auto a = run({"analyze", entry.path().string()});
    const auto b = run({"analyze", entry.path().string()});
    EXPECT_EQ(a.code, cli::kOk) << entry.path() << a.err;
    EXPECT_EQ(a.out, b.out) << entry.path();
  }
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(run({"analyze", fixture("missing.json")}).code, cli::kInputError);
  EXPECT_EQ(run({"analyze", fixture("surfaces_point.json")}).code, cli::kInputError);
  EXPECT_EQ(run({"proj", fixture("a6.json")}).code, cli::kInputError);
  EXPECT_EQ(run({"bogus"}).code, cli::kInputError);
  EXPECT_EQ(run({"analyze", fixture("a6.json"), "--json", "--md"}).code, cli::kInputError);
  EXPECT_EQ(run({"analyze", fixture("a6.json"), "--cd", "2"}).code, cli::kInputError);
  EXPECT_EQ(run({"gamma", fixture("a6.json"), "--t", "4"}).code, cli::kInputError);

  // c(A6) = 2, so depth <= 3 is consistent and depth 5 is not.
  EXPECT_EQ(run({"analyze", fixture("a6.json"), "--depth", "3", "--check"}).code, cli::kOk);
  EXPECT_EQ(run({"analyze", fixture("a6.json"), "--depth", "5", "--check"}).code,
            cli::kCheckFailed);
  EXPECT_EQ(run({"analyze", fixture("a6.json"), "--depth", "5"}).code, cli::kOk);
  EXPECT_EQ(
      run({"analyze", fixture("a6.json"), "--cd", "1", "--ambient", "6", "--check"}).code,
      cli::kCheckFailed);
  EXPECT_EQ(
      run({"analyze", fixture("a6.json"), "--cd", "3", "--ambient", "6", "--check"}).code,
      cli::kOk);
}

TEST(CliTest, WarningsGoToStderr) {
  const auto r = run({"analyze", fixture("nonminimal.json")});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.err.find("warning: "), std::string::npos);
  EXPECT_EQ(Json::parse(r.out).at("s"), 2);
  EXPECT_EQ(run({"analyze", fixture("nonminimal.json"), "--strict"}).code, cli::kInputError);
}

TEST(CliTest, ErrorMessagesNameTheField) {
  const auto dir = std::filesystem::temp_directory_path() / "lyubgraph_cli_test";
  std::filesystem::create_directories(dir);
  const auto bad = dir / "bad.json";
  std::ofstream(bad) << R"({"type":"coordinate","variables":["x","y"],"primes":[["x","q"]]})";
  const auto r = run({"analyze", bad.string()});
  EXPECT_EQ(r.code, cli::kInputError);
  EXPECT_NE(r.err.find("primes[0][1]: unknown variable 'q'"), std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST(CliTest, GammaJsonAndProjective) {
  const auto j = Json::parse(run({"gamma", fixture("a6.json"), "--t", "1"}).out);
  EXPECT_EQ(j.at("component_count"), 3);
  EXPECT_EQ(j.at("vertices").at(0), "(x,y)");
  const auto p = Json::parse(run({"gamma", fixture("surfaces_point.json"), "--t", "1"}).out);
  EXPECT_EQ(p.at("component_count"), 2);
}

TEST(CliTest, SectionIterateAndConn) {
  const auto s = Json::parse(run({"section", fixture("single_prime.json"), "--iterate", "2"}).out);
  EXPECT_EQ(s.at("result").at("dim"), 3);
  const auto c = Json::parse(run({"conn", fixture("two_planes.json"), "--oracle"}).out);
  EXPECT_EQ(c.at("graph").at("c"), 0);
  EXPECT_EQ(c.at("oracle").at("c"), 0);
}

TEST(CliTest, Sweep) {
  const auto r = run({"sweep", "--max-n", "6", "--max-s", "3", "--seed", "5", "--count", "50"});
  EXPECT_EQ(r.code, cli::kOk) << r.out;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j.at("mode"), "random");
  EXPECT_EQ(j.at("instances"), 50);
  EXPECT_TRUE(j.at("failures").empty());
  EXPECT_EQ(run({"sweep", "--exhaustive", "--max-n", "11"}).code, cli::kInputError);
}

}  // namespace
}  // namespace lyubgraph
