#include "lattica/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "lattica/io.hpp"
#include "lattica/laws.hpp"

using namespace lattica;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

std::string data(const std::string& name) { return std::string(LATTICA_TEST_DATA) + "/" + name; }

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(Cli, ValidateTerminalContext) {
  auto r = run({"validate", data("terminal.cxt")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Sem size 1\n"), std::string::npos);
}

TEST(Cli, ValidateOtherDocuments) {
  EXPECT_NE(run({"validate", data("k2.cxt")}).out.find("Sem size 4"), std::string::npos);
  EXPECT_NE(run({"validate", data("diamond.json")}).out.find("semilattice: 4 elements, bottom bot"),
            std::string::npos);
  EXPECT_EQ(run({"validate", data("rules.seq")}).code, 0);
}

TEST(Cli, ConceptsOfK2InLexicographicOrder) {
  auto r = run({"concepts", data("k2.cxt")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out), (std::vector<std::string>{"{a,b}", "{a}", "{b}", "{}"}));
}

TEST(Cli, LawsCurryingCountLine) {
  auto r = run({"laws", "prop5.10", "--max-sem", "2"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("hom-sets: 6 = 6\n"), std::string::npos) << r.out;
}

TEST(Cli, EveryLawSuiteExitsZero) {
  for (const auto& name : law_suite_names()) {
    auto r = run({"laws", name});
    EXPECT_EQ(r.code, 0) << name << "\n" << r.out;
    EXPECT_EQ(r.out.rfind(name + ": ok", 0), 0u) << r.out;
  }
  EXPECT_EQ(run({"laws", "all", "--seed", "17"}).code, 0);
}

TEST(Cli, LawOutputIsDeterministicForASeed) {
  EXPECT_EQ(run({"laws", "all", "--seed", "99"}).out, run({"laws", "all", "--seed", "99"}).out);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"validate", data("missing.cxt")}).code, 2);
  EXPECT_EQ(run({"laws", "no-such-suite"}).code, 2);
  EXPECT_EQ(run({"--limit", "bogus=1", "validate", data("k2.cxt")}).code, 2);
  auto guard = run({"--limit", "mappings=1", "laws", "prop5.10"});
  EXPECT_EQ(guard.code, 3);
  EXPECT_NE(guard.err.find("size guard"), std::string::npos);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ValidationFailureReportsWitnessJson) {
  const std::string path = ::testing::TempDir() + "/broken.json";
  std::ofstream(path) << R"({"format":"poset","elements":["a","b"],"leq":[["a","a"],["b","b"],["a","b"],["b","a"]]})";
  auto r = run({"validate", path});
  EXPECT_EQ(r.code, 1);
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["error"], "validation");
  EXPECT_EQ(j["rule"], "antisymmetry");
  EXPECT_FALSE(j["witness"].empty());
  std::remove(path.c_str());
}

TEST(Cli, DotIsStableAcrossRuns) {
  auto a = run({"dot", data("diamond.json")});
  auto b = run({"dot", data("diamond.json")});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, hasse_dot(poset_from_json(Json::parse(R"({"format":"poset",
      "elements":["a","b","bot","top"],
      "leq":[["a","a"],["a","top"],["b","b"],["b","top"],["bot","a"],["bot","b"],
             ["bot","bot"],["bot","top"],["top","top"]]})"))));
  EXPECT_EQ(run({"dot", data("k2.cxt")}).out, run({"dot", data("k2.cxt")}).out);
}

TEST(Cli, ConvertRoundTrips) {
  const std::string json = ::testing::TempDir() + "/k2.json";
  ASSERT_EQ(run({"-o", json, "convert", data("k2.cxt"), "--to", "context"}).code, 0);
  auto back = run({"convert", json, "--to", "cxt"});
  std::ifstream in(data("k2.cxt"), std::ios::binary);
  std::stringstream original;
  original << in.rdbuf();
  EXPECT_EQ(back.out, original.str());
  std::remove(json.c_str());

  auto seq = run({"convert", data("rules.seq"), "--to", "sequents"});
  EXPECT_EQ(seq.code, 0);
  EXPECT_EQ(lines(seq.out).front(), "# propositions: a, b, c");
  EXPECT_NE(seq.out.find("a |- b, c\n"), std::string::npos) << seq.out;
}

TEST(Cli, RzQueries) {
  auto r = run({"rz", data("k2.cxt"), data("k2_queries.seq")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out), (std::vector<std::string>{"a |- b: no", "a, b |- a: yes", "T |- a: no",
                                                    "b |- T: yes"}));
}

TEST(Cli, CurryThenUncurry) {
  const std::string curried = ::testing::TempDir() + "/curried.json";
  const auto chain = data("chain2.cxt");
  ASSERT_EQ(run({"-o", curried, "curry", chain, chain, chain, data("bottom_map.json")}).code, 0);
  auto back = run({"uncurry", chain, chain, chain, curried});
  EXPECT_EQ(back.code, 0);
  std::ifstream in(data("bottom_map.json"));
  EXPECT_EQ(Json::parse(back.out)["pairs"], Json::parse(in)["pairs"]);
  std::remove(curried.c_str());
}

TEST(Cli, TopologyReport) {
  auto r = run({"topology", data("diamond.json")});
  EXPECT_EQ(r.code, 0);
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["scott"]["opens"].size(), 6u);
  EXPECT_TRUE(j["specialization_round_trip"].get<bool>());
  EXPECT_EQ(j["points"], Json({"a", "b"}));
  EXPECT_TRUE(j["spaces"]["scott_filters_homeomorphic"].get<bool>());
  EXPECT_TRUE(j["spaces"]["filters_points_homeomorphic"].get<bool>());
}

TEST(Cli, ConstructionsEmitCanonicalCxt) {
  for (const char* verb : {"product", "tensor", "funcspace"}) {
    auto r = run({verb, data("chain2.cxt"), data("chain2.cxt")});
    EXPECT_EQ(r.code, 0) << verb;
    EXPECT_EQ(write_cxt(parse_cxt(r.out)), r.out) << verb;
  }
  auto fs = run({"funcspace", data("chain2.cxt"), data("chain2.cxt"), "--json"});
  EXPECT_EQ(Json::parse(fs.out)["elements"].size(), 3u);
}
