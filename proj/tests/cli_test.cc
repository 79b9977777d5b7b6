// Copyright 2026 The qfold Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qfold/io.h"
#include "qfold/lie_fold.h"

namespace qfold {
namespace {

struct CliRun {
  int code = 0;
  std::string out, err;
};

CliRun Cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  CliRun r;
  r.code = RunCli(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string WriteTemp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("qfold_cli_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

constexpr const char* kPathModule = R"({"v": [1, 1, 1], "w": [0, 0, 0],
  "B": [{"edge": "e1", "reverse": false, "matrix": [["1"]]},
        {"edge": "e2", "reverse": false, "matrix": [["1"]]}]})";

constexpr const char* kStableModule = R"({"v": [1, 1, 1], "w": [1, 0, 1],
  "B": [{"edge": "e1", "reverse": true, "matrix": [["1"]]},
        {"edge": "e2", "reverse": false, "matrix": [["1"]]}],
  "J": [[["1"]], [], [["1"]]]})";

TEST(CliTest, SplitD4SwapIsA5) {
  const CliRun r = Cli({"split", "--corpus", "D4-swap", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  const auto qa = QuiverFromJson(j);
  EXPECT_EQ(ClassifyCartan(CartanFromQuiver(qa.quiver)).ToString(), "A5");
  EXPECT_EQ(j["labels"].size(), 5u);
  EXPECT_NE(Cli({"split", "--corpus", "D4-swap"}).out.find("D4 -> A5"), std::string::npos);
}

TEST(CliTest, FoldA3FlipIsC2) {
  const CliRun r = Cli({"--json", "fold", "--corpus", "A3-flip"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["base_type"], "A3");
  EXPECT_EQ(j["folded_type"], "C2");
  EXPECT_EQ(j["folded_cartan"], Json::parse("[[2, -1], [-2, 2]]"));
}

TEST(CliTest, QuotientLabels) {
  const CliRun r = Cli({"quotient", "--corpus", "D5-swap", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["vertices"].size(), 4u);
  EXPECT_EQ(j["labels"]["[4,5]"]["members"], Json::parse(R"(["4", "5"])"));
}

TEST(CliTest, InputFromStdin) {
  const std::string a3 = CorpusEntryToJson(FindCorpusEntry("A3-flip")).dump();
  const CliRun r = Cli({"fold", "--input", "-", "--json"}, a3);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["folded_type"], "C2");
}

TEST(CliTest, BranchA3C2) {
  CliRun r = Cli({"branch", "--corpus", "A3-flip", "--framing", "0,1,0", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["terms"].size(), 2u);
  EXPECT_EQ(j["terms"][0]["weight"], Json::parse("[0, 1]"));
  EXPECT_EQ(j["terms"][0]["dimension"], 5);
  EXPECT_EQ(j["dimension"]["source"], 6);
  EXPECT_EQ(j["dimension"]["conserved"], true);
  r = Cli({"branch", "--corpus", "A3-flip", "--framing", "1,0,0"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("NotInvariantWeight"), std::string::npos);
}

TEST(CliTest, DimsRecords) {
  const CliRun r = Cli({"dims", "--corpus", "D4-swap", "--v", "1,1,1,1", "--w", "[1,1,1,1]", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  ASSERT_EQ(j.size(), 4u);
  EXPECT_EQ(j[0]["dim"], 4);
  EXPECT_EQ(Cli({"dims", "--corpus", "D4-swap", "--v", "1,1,1,0"}).code, 1);
}

TEST(CliTest, ModuleSubcommands) {
  const std::string path = WriteTemp("path.json", kPathModule);
  const std::string stable = WriteTemp("stable.json", kStableModule);
  CliRun r = Cli({"module", "witness", "--corpus", "A3-flip", "--module", path, "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["verified"], true);
  EXPECT_EQ(j["block_diagonal_verifies"], false);
  EXPECT_EQ(j["fixed_vertices"][0]["profile"]["outside"], 0);

  EXPECT_EQ(Cli({"module", "check", "--corpus", "A3-flip", "--module", stable}).code, 0);
  EXPECT_EQ(Cli({"module", "check", "--corpus", "A3-flip", "--module", path}).code, 2);
  r = Cli({"module", "transition", "--corpus", "A3-flip", "--module", stable, "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["transition"][1], Json::parse(R"([["-1"]])"));
  EXPECT_EQ(Cli({"module", "transition", "--corpus", "A3-flip", "--module", path}).code, 1);

  r = Cli({"module", "theta", "--corpus", "A3-flip", "--module", stable, "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string once = WriteTemp("once.json", r.out);
  r = Cli({"module", "theta", "--corpus", "A3-flip", "--module", once, "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const DoubledQuiver dq = BuildDoubled(families::A(3));
  EXPECT_EQ(ModuleFromJson(dq, Json::parse(r.out)), ModuleFromJson(dq, Json::parse(kStableModule)));
}

TEST(CliTest, Theorem5GenerationIsDeterministic) {
  const std::vector<std::string> args = {"module", "theorem5", "--corpus", "D4-swap", "--v", "1,1,1,1",
                                         "--v-sub", "0,1,1,1", "--count", "3", "--seed", "5"};
  const CliRun a = Cli(args), b = Cli(args);
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(Cli({"module", "theorem5", "--corpus", "D4-swap"}).code, 1);
}

TEST(CliTest, VerifyAllSeed7) {
  const CliRun a = Cli({"verify-all", "--seed", "7", "--threads", "1"});
  EXPECT_EQ(a.code, 0) << a.out;
  const CliRun b = Cli({"verify-all", "--seed", "7", "--threads", "4"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find(" 0 failed"), std::string::npos);
}

TEST(CliTest, CorpusOverride) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "qfold_cli_corpus";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::ofstream(dir / "pair.json") << R"({"name": "pair", "vertices": ["x", "y", "z"],
      "edges": [{"id": "h", "src": "y", "tgt": "x"}, {"id": "k", "src": "y", "tgt": "z"}],
      "automorphism": {"vertices": {"x": "z", "z": "x"}}})";
  setenv("QFOLD_CORPUS_DIR", dir.c_str(), 1);
  const CliRun r = Cli({"fold", "--corpus", "pair", "--json"});
  const CliRun missing = Cli({"fold", "--corpus", "A3-flip"});
  unsetenv("QFOLD_CORPUS_DIR");
  fs::remove_all(dir);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["base_type"], "A3");
  EXPECT_EQ(missing.code, 1);
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(Cli({}).code, 1);
  EXPECT_EQ(Cli({"frobnicate"}).code, 1);
  EXPECT_EQ(Cli({"--help"}).code, 0);
  EXPECT_EQ(Cli({"split", "--corpus", "nope"}).code, 1);
  EXPECT_EQ(Cli({"split"}).code, 1);
  EXPECT_EQ(Cli({"fold", "--corpus", "A4-flip"}).code, 1);
  EXPECT_EQ(Cli({"split", "--input", "-"}, "{not json").code, 1);
}

}  // namespace
}  // namespace qfold
