#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include <json.hpp>

#include "fixtures.hpp"
#include "friezekit/cli.hpp"
#include "friezekit/ensemble.hpp"
#include "friezekit/render.hpp"
#include "friezekit/serialize.hpp"

using namespace friezekit;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(Cli, KnitVerticalAscii) {
  const auto r = run({"knit-vertical", "--first-row", "1,2,5", "--period", "3", "--out", "ascii"});
  EXPECT_EQ(r.status, cli::kOk);
  EXPECT_EQ(r.out, render_ascii(fixtures::width3_from_125()));
}

TEST(Cli, KnitVerticalJsonRoundTrips) {
  const auto r = run({"knit-vertical", "--first-row", "1,2,5,1,2,5", "--period", "3"});
  ASSERT_EQ(r.status, cli::kOk);
  EXPECT_EQ(deserialize(r.out).grid, fixtures::width3_from_125());
}

TEST(Cli, KnitVerticalOpenAndBlocked) {
  const auto open = run({"knit-vertical", "--first-row", "3", "--max-rows", "4"});
  EXPECT_EQ(open.status, cli::kOk);
  EXPECT_EQ(nlohmann::json::parse(open.out)["kind"], "open-strip");

  const auto blocked = run({"knit-vertical", "--first-row", "1,1,3,-3,0,1,-5"});
  EXPECT_EQ(blocked.status, cli::kDomain);
  EXPECT_NE(blocked.err.find("row 4"), std::string::npos);

  EXPECT_EQ(run({"knit-vertical", "--first-row", "1,2,5", "--period", "2"}).status, cli::kUsage);
  EXPECT_EQ(run({"knit-vertical", "--first-row", "1,x"}).status, cli::kUsage);
  EXPECT_EQ(run({"knit-vertical", "--first-row", "0"}).status, cli::kDomain);
}

TEST(Cli, KnitHorizontalMatchesLibrary) {
  const auto r = run({"knit-horizontal", "--width", "5", "--values", "2,3,8,3,4", "--dirs",
                      "SW,SE,SE,SW"});
  ASSERT_EQ(r.status, cli::kOk);
  EXPECT_EQ(deserialize(r.out).grid, y_knit_horizontal(fixtures::width5_zigzag()).grid());
  EXPECT_EQ(run({"knit-horizontal", "--width", "2", "--values", "1,-1"}).status, cli::kDomain);
  EXPECT_EQ(run({"knit-horizontal", "--width", "2", "--values", "1,1", "--dirs", "NE"}).status,
            cli::kUsage);
  EXPECT_EQ(run({"knit-horizontal", "--width", "3", "--values", "1,1"}).status, cli::kUsage);
}

TEST(Cli, VerifyGlideRender) {
  const auto good = write_temp("friezekit_good.json",
                               serialize(fixtures::width4_with_minus_ones(), PatternKind::yfrieze));
  const auto bad = write_temp(
      "friezekit_bad.json",
      serialize(fixtures::width5_arithmetic().with_entry(2, 6, Rational(23)), PatternKind::yfrieze));
  EXPECT_EQ(run({"verify", good.string()}).status, cli::kOk);
  const auto v = run({"verify", bad.string(), "--out", "json"});
  EXPECT_EQ(v.status, cli::kCheckFailed);
  EXPECT_EQ(nlohmann::json::parse(v.out)["violations"].size(), 4u);
  EXPECT_EQ(run({"glide-check", good.string()}).out, "true\n");
  EXPECT_EQ(run({"render", good.string()}).out, render_ascii(fixtures::width4_with_minus_ones()));

  const auto frieze = write_temp(
      "friezekit_frieze.json",
      serialize(frieze_knit_vertical(fixtures::width4_frieze_quiddity()).grid(), PatternKind::frieze));
  EXPECT_EQ(run({"verify", frieze.string()}).status, cli::kOk);
  EXPECT_EQ(run({"glide-check", frieze.string()}).status, cli::kOk);
}

TEST(Cli, MissingAndMalformedFiles) {
  EXPECT_EQ(run({"verify", "/nonexistent/missing.json"}).status, cli::kDomain);
  const auto broken = write_temp("friezekit_broken.json", "{\"kind\":\"yfrieze\",");
  const auto r = run({"verify", broken.string()});
  EXPECT_EQ(r.status, cli::kDomain);
  EXPECT_NE(r.err.find("parse error"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).status, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).status, cli::kUsage);
  EXPECT_EQ(run({"enumerate-friezes", "--width", "2", "--bogus"}).status, cli::kUsage);
  EXPECT_EQ(run({"enumerate-friezes"}).status, cli::kUsage);
  EXPECT_EQ(run({"--help"}).status, cli::kOk);
}

TEST(Cli, EnumerateYFriezes) {
  const auto r = run({"enumerate-yfriezes", "--width", "2", "--bound", "100", "--out", "diagonals"});
  EXPECT_EQ(r.status, cli::kOk);
  EXPECT_EQ(r.out, "1,1\n1,2\n2,1\n2,3\n3,2\n");
  EXPECT_NE(r.err.find("complete_up_to_bound: 100"), std::string::npos);

  const auto j = run({"enumerate-yfriezes", "--width", "3", "--bound", "50", "--jobs", "2"});
  ASSERT_EQ(j.status, cli::kOk);
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["complete_up_to_bound"], 50);
  EXPECT_EQ(doc["count"], 10);
  for (const auto& p : doc["patterns"]) {
    const TaggedGrid tg = deserialize(p.dump());
    EXPECT_EQ(tg.kind, PatternKind::yfrieze);
    EXPECT_TRUE(YFrieze(tg.grid).is_arithmetic());
  }
  EXPECT_EQ(run({"enumerate-yfriezes", "--width", "4", "--bound", "2"}).status, cli::kDomain);
}

TEST(Cli, BoundFromEnvironment) {
  ::setenv(cli::kBoundEnv, "3", 1);
  const auto r = run({"enumerate-yfriezes", "--width", "2", "--out", "count"});
  ::unsetenv(cli::kBoundEnv);
  EXPECT_EQ(r.out, "5\n");
  EXPECT_NE(r.err.find("complete_up_to_bound: 3"), std::string::npos);
}

TEST(Cli, EnumerateFriezesAndPMap) {
  EXPECT_EQ(run({"enumerate-friezes", "--width", "3", "--out", "count"}).out, "14\n");
  const auto doc = nlohmann::json::parse(run({"enumerate-friezes", "--width", "2"}).out);
  ASSERT_EQ(doc.size(), 5u);
  EXPECT_EQ(deserialize(doc[0].dump()).kind, PatternKind::frieze);

  const auto pm = run({"pmap", "--width", "2", "--all", "--out", "diagonals"});
  EXPECT_EQ(pm.status, cli::kOk);
  std::istringstream lines(pm.out);
  std::set<std::string> seen;
  for (std::string line; std::getline(lines, line);) seen.insert(line);
  EXPECT_EQ(seen, (std::set<std::string>{"1,1", "1,2", "2,1", "2,3", "3,2"}));

  const auto one = run({"pmap", "--width", "3", "--frieze-index", "0"});
  ASSERT_EQ(one.status, cli::kOk);
  EXPECT_EQ(deserialize(one.out).grid, p_map(enumerate_friezes(3)[0]).grid());
  EXPECT_EQ(run({"pmap", "--width", "3", "--frieze-index", "14"}).status, cli::kUsage);
}

TEST(Cli, SurjectivityReportFile) {
  const auto path = std::filesystem::temp_directory_path() / "friezekit_report.json";
  const auto r = run({"surjectivity", "--width", "3", "--bound", "100", "--out", path.string()});
  ASSERT_EQ(r.status, cli::kOk);
  std::ifstream in(path);
  const auto doc = nlohmann::json::parse(in);
  EXPECT_EQ(doc["width"], 3);
  EXPECT_EQ(doc["bound"], 100);
  EXPECT_EQ(doc["image_size"], 10);
  EXPECT_EQ(doc["enumerated_size"], 10);
  EXPECT_TRUE(doc["missing"].empty());
  EXPECT_EQ(doc["classes"]["size2"], 4);
  EXPECT_EQ(nlohmann::json::parse(to_json(surjectivity_report(3, 100))), doc);
}
