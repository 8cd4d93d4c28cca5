#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Invocation {
  int code = -1;
  std::string out;
};

Invocation run(const std::string& args) {
  const std::string cmd = std::string(XATLAS_BIN) + " " + args + " 2>/dev/null";
  Invocation r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("xatlas_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

std::size_t occurrences(const std::string& s, const std::string& needle) {
  std::size_t k = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++k;
  return k;
}

}  // namespace

TEST_F(Cli, BuildThenCountKnn6) {
  ASSERT_EQ(run("build --family knn --n 6 --out " + path("d6.json")).code, 0);
  const Invocation r = run("count " + path("d6.json"));
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["total"], 12);
  EXPECT_EQ(j["geometric"], 12);
  EXPECT_EQ(j["agree"], true);
}

TEST_F(Cli, CountFormats) {
  ASSERT_EQ(run("build --family knn --n 7 --out " + path("d7.json")).code, 0);
  const Invocation csv = run("count " + path("d7.json") + " --format csv");
  ASSERT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out, "family,n,total,geometric,agree\nknn,7,36,36,yes\n");
  const Invocation md = run("count " + path("d7.json") + " --format md");
  EXPECT_NE(md.out.find("| knn | 7 | 36 | 36 | yes |"), std::string::npos);
}

TEST_F(Cli, TrivialSizes) {
  ASSERT_EQ(run("build --family knn --n 1 --out " + path("k1.json")).code, 0);
  EXPECT_EQ(json::parse(run("count " + path("k1.json")).out)["total"], 0);
  ASSERT_EQ(run("build --family c4 --n 2 --out " + path("c2.json")).code, 0);
  EXPECT_EQ(json::parse(run("count " + path("c2.json")).out)["total"], 0);
}

TEST_F(Cli, BuildSplitFamiliesCountToUpperBound) {
  ASSERT_EQ(run("build --family p3 --n 5 --out " + path("p5.json")).code, 0);
  const json p = json::parse(run("count " + path("p5.json")).out);
  EXPECT_EQ(p["total"], p["geometric"]);
  ASSERT_EQ(run("build --family c4 --n 4 --out " + path("c4.json")).code, 0);
  const json c = json::parse(run("count " + path("c4.json")).out);
  EXPECT_EQ(c["total"], c["geometric"]);
}

TEST_F(Cli, VerifyRangesMatch) {
  const Invocation knn = run("verify --family knn --range 5..13 --format csv");
  EXPECT_EQ(knn.code, 0);
  EXPECT_EQ(occurrences(knn.out, ",yes,"), 9u);
  EXPECT_EQ(run("verify --family p3 --range 3..9").code, 0);
  EXPECT_EQ(run("verify --family c4 --range 3..9").code, 0);
  const Invocation geo = run("verify --family knn --range 2..7 --geometric --format json");
  EXPECT_EQ(geo.code, 0);
  for (const auto& row : json::parse(geo.out)) EXPECT_EQ(row["geometric"], row["counted"]);
}

TEST_F(Cli, VerifyWritesFile) {
  ASSERT_EQ(run("verify --family knn --n 6 --format csv --out " + path("v.csv")).code, 0);
  EXPECT_EQ(slurp(path("v.csv")), "family,n,counted,formula,geometric,match,diagnostic\nknn,6,12,12,,yes,\n");
}

TEST_F(Cli, BoundsExactColumn) {
  const Invocation r = run("bounds --family knn --range 1..5 --format json");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  ASSERT_EQ(j.size(), 5u);
  const int expected[] = {0, 0, 0, 0, 4};
  for (int i = 0; i < 5; ++i) EXPECT_EQ(j[i]["exact"], expected[i]) << i + 1;
}

TEST_F(Cli, BoundsOpenInterval) {
  const Invocation r = run("bounds --family c4 --range 3..3 --format json");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j[0]["upper"], 6);
  EXPECT_TRUE(j[0]["exact"].is_null());
  const Invocation p = run("bounds --family p3 --range 2..2 --format json");
  EXPECT_EQ(json::parse(p.out)[0]["exact"], 0);
}

TEST_F(Cli, BoundsCsvHeader) {
  const Invocation r = run("bounds --family p3 --range 3..6");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')),
            "family,n,lower_raw,lower,upper,exact,lower_raw_decimal,lower_decimal,lower_source,upper_source");
  EXPECT_EQ(occurrences(r.out, "\n"), 5u);
}

TEST_F(Cli, RenderD6) {
  ASSERT_EQ(run("build --family knn --n 6 --out " + path("d6.json")).code, 0);
  ASSERT_EQ(run("render " + path("d6.json") + " --out " + path("d6.svg")).code, 0);
  const std::string svg = slurp(path("d6.svg"));
  EXPECT_EQ(occurrences(svg, "<path class=\"edge\""), 30u);
  EXPECT_EQ(occurrences(svg, "<circle class=\"vertex\""), 12u);
  EXPECT_NE(svg.find("crossings: 12"), std::string::npos);
  const Invocation print = run("render " + path("d6.json") + " --style print");
  EXPECT_EQ(print.code, 0);
  EXPECT_NE(print.out.find("#e69f00"), std::string::npos);
}

TEST_F(Cli, RenderStyleFile) {
  ASSERT_EQ(run("build --family knn --n 5 --out " + path("d5.json")).code, 0);
  std::ofstream(path("style.json")) << R"({"width": 500, "colors": {"E_X": "#123456"}})";
  const Invocation r = run("render " + path("d5.json") + " --style " + path("style.json"));
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("width=\"500.000000\""), std::string::npos);
  EXPECT_NE(r.out.find("#123456"), std::string::npos);
  std::ofstream(path("bad.json")) << R"({"widht": 500})";
  EXPECT_EQ(run("render " + path("d5.json") + " --style " + path("bad.json")).code, 2);
}

TEST_F(Cli, EmbedCongestion) {
  for (const auto& [family, n] : {std::pair<std::string, int>{"knn", 5}, {"p3", 6}, {"c4", 3}}) {
    const Invocation r = run("embed --family " + family + " --n " + std::to_string(n));
    ASSERT_EQ(r.code, 0) << family;
    const json j = json::parse(r.out);
    EXPECT_EQ(j["congestion"], (n - 2) * (n + 2)) << family;
    EXPECT_EQ(j["match"], true);
  }
}

TEST_F(Cli, OutputIsDeterministic) {
  for (const std::string fam : {"knn", "p3", "c4"}) {
    ASSERT_EQ(run("build --family " + fam + " --n 7 --out " + path("a.json")).code, 0);
    ASSERT_EQ(run("build --family " + fam + " --n 7 --out " + path("b.json")).code, 0);
    EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json"))) << fam;
    ASSERT_EQ(run("render " + path("a.json") + " --out " + path("a.svg")).code, 0);
    ASSERT_EQ(run("render " + path("b.json") + " --out " + path("b.svg")).code, 0);
    EXPECT_EQ(slurp(path("a.svg")), slurp(path("b.svg"))) << fam;
  }
  EXPECT_EQ(run("bounds --family c4 --range 1..20").out, run("bounds --family c4 --range 1..20").out);
}

TEST_F(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("build --family k5 --n 5").code, 2);
  EXPECT_EQ(run("build --family knn --n 0").code, 2);
  EXPECT_EQ(run("verify --family knn --range 9..3").code, 2);
  EXPECT_EQ(run("verify --family knn --range abc").code, 2);
  EXPECT_EQ(run("verify --family knn").code, 2);
  EXPECT_EQ(run("verify --family knn --n 4 --range 3..5").code, 2);
  EXPECT_EQ(run("bounds --family knn --n 5 --format xml").code, 2);
  EXPECT_EQ(run("count " + path("missing.json")).code, 2);
  EXPECT_EQ(run("embed --family c4 --n 2").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("").code, 2);
}

TEST_F(Cli, MalformedDocumentExitsTwo) {
  std::ofstream(path("junk.json")) << "{\"version\": 1, \"family\": \"knn\"";
  EXPECT_EQ(run("count " + path("junk.json")).code, 2);
  std::ofstream(path("wrong.json")) << R"({"version": 99})";
  EXPECT_EQ(run("count " + path("wrong.json")).code, 2);
}

TEST_F(Cli, DocumentMissingAnEdgeIsRejected) {
  ASSERT_EQ(run("build --family knn --n 6 --out " + path("d6.json")).code, 0);
  json j = json::parse(slurp(path("d6.json")));
  auto& polys = j["expanded"]["polylines"];
  ASSERT_FALSE(polys.empty());
  polys.erase(polys.begin());
  std::ofstream(path("t.json")) << j.dump();
  EXPECT_EQ(run("count " + path("t.json")).code, 2);
}
