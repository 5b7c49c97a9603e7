#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "htg/automorphisms.hpp"
#include "htg/cli.hpp"
#include "htg/graph_io.hpp"
#include "htg/named_graphs.hpp"
#include "json.hpp"

namespace htg {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, ClassifyPappus) {
  const Outcome r = run({"classify", "3", "6", "3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("Exceptional (Pappus)"), std::string::npos);
  EXPECT_NE(r.out.find("|Aut|:        216"), std::string::npos);
  EXPECT_NE(r.out.find("3-arc-regular"), std::string::npos);
}

TEST(Cli, ClassifyVerifyJson) {
  const Outcome r = run({"classify", "1", "18", "5", "--verify", "--format", "json"});
  EXPECT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["category"], "RegularAut");
  EXPECT_EQ(j["aut_order"], 18);
  EXPECT_EQ(j["oracle_aut_order"], 18);
  EXPECT_EQ(j["verified"], true);
}

TEST(Cli, ClassifyNormalizesWithNotice) {
  const Outcome r = run({"classify", "1", "14", "9"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.err.find("normalized to HTG(1,14,5)"), std::string::npos);
  EXPECT_NE(r.out.find("Heawood"), std::string::npos);
}

TEST(Cli, UsageAndValidationErrors) {
  const Outcome parity = run({"classify", "1", "6", "2"});
  EXPECT_EQ(parity.code, kExitUsage);
  EXPECT_NE(parity.err.find("ParityMismatch"), std::string::npos);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"classify", "1", "6"}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"export", "1", "6", "3", "--format", "png"}).code, kExitUsage);
  EXPECT_EQ(run({"census", "--max-order", "3"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--max-order", "500"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Cli, CensusCsvAndJsonl) {
  const Outcome csv = run({"census", "--max-order", "24", "--jobs", "2"});
  EXPECT_EQ(csv.code, kExitOk);
  EXPECT_EQ(csv.out.rfind("# htg-census v1\n", 0), 0u);
  EXPECT_NE(csv.out.find("3,6,3,3,18,6,Exceptional,true,true,true,true,216,12,Pappus,\n"),
            std::string::npos);
  const Outcome empty = run({"census", "--max-order", "4"});
  EXPECT_EQ(empty.code, kExitOk);
  EXPECT_EQ(std::count(empty.out.begin(), empty.out.end(), '\n'), 2);

  const Outcome jsonl = run({"census", "--max-order", "12", "--format", "jsonl", "--verify"});
  EXPECT_EQ(jsonl.code, kExitOk);
  std::istringstream lines(jsonl.out);
  for (std::string line; std::getline(lines, line);) {
    EXPECT_EQ(nlohmann::json::parse(line)["verified"], true);
  }
}

TEST(Cli, CensusToFile) {
  const auto path = std::filesystem::temp_directory_path() / "htg_cli_census.csv";
  const Outcome r = run({"census", "--max-order", "30", "--out", path.string()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first, "# htg-census v1");
  std::filesystem::remove(path);
  EXPECT_EQ(run({"census", "--max-order", "30", "--out", "/nonexistent/dir/x.csv"}).code, kExitIo);
}

TEST(Cli, Verify) {
  const Outcome r = run({"verify", "--max-order", "18", "--jobs", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("K33: 1"), std::string::npos);
  EXPECT_NE(r.out.find("StabilizerTwo"), std::string::npos);
  EXPECT_NE(r.out.find("mismatches: 0"), std::string::npos);
}

TEST(Cli, ExportGraph6) {
  const Outcome r = run({"export", "1", "6", "3", "--format", "graph6"});
  EXPECT_EQ(r.code, kExitOk);
  const Graph g = from_graph6(r.out);
  EXPECT_EQ(g.order(), 6);
  EXPECT_TRUE(are_isomorphic(g, named(NamedKind::K33)));
}

TEST(Cli, ExportDot) {
  const Outcome r = run({"export", "3", "6", "3", "--format", "dot"});
  EXPECT_EQ(r.code, kExitOk);
  std::istringstream lines(r.out);
  int edges = 0;
  std::map<std::string, int> per_color;
  for (std::string line; std::getline(lines, line);) {
    if (line.find(" -- ") == std::string::npos) continue;
    ++edges;
    for (const char* color : {"red", "blue", "green"}) {
      if (line.find(std::string("color=") + color + "]") != std::string::npos) ++per_color[color];
    }
  }
  EXPECT_EQ(edges, 27);
  EXPECT_EQ(per_color["red"], 9);
  EXPECT_EQ(per_color["blue"], 9);
  EXPECT_EQ(per_color["green"], 9);
}

TEST(Cli, ExportJson) {
  const Outcome r = run({"export", "2", "8", "6", "--format", "json"});
  EXPECT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["ell"], 6);
  EXPECT_EQ(j["vertices"].size(), 16u);
  EXPECT_EQ(j["edges"].size(), 24u);
  EXPECT_EQ(j["adjacency"][0].size(), 3u);
  EXPECT_EQ(j["vertices"][9]["row"], 1);
  EXPECT_EQ(j["vertices"][9]["column"], 1);
  EXPECT_EQ(j["vertices"][0]["eps"], 0);
  EXPECT_EQ(run({"export", "1", "6", "1", "--format", "json"}).code, kExitUsage);
}

}  // namespace
}  // namespace htg
