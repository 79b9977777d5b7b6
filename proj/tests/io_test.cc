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

#include "qfold/io.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>

#include "qfold/error.h"

namespace qfold {
namespace {

TEST(CorpusTest, NamesAndAdmissibility) {
  const std::map<std::string, bool> expected = {
      {"A1-id", true},         {"A3-flip", true},       {"A4-flip", false},
      {"A5-flip", true},       {"A7-flip", true},       {"A9-flip", true},
      {"D4-swap", true},       {"D4-triality", true},   {"D5-swap", true},
      {"D6-swap", true},       {"affineA1-swap", true}, {"affineA3-refl", true},
      {"affineA3-rot", false}, {"affineA5-refl", true}, {"affineD4-swap", true}};
  std::map<std::string, bool> got;
  for (const auto& e : BuiltinCorpus()) {
    EXPECT_NO_THROW(CheckAutomorphism(e.quiver, e.automorphism)) << e.name;
    got[e.name] = e.admissible;
  }
  EXPECT_EQ(got, expected);
  EXPECT_EQ(FindCorpusEntry("D4-triality").automorphism.order(), 3);
  EXPECT_THROW(FindCorpusEntry("E8-nothing"), Error);
}

TEST(CorpusTest, JsonRoundTrip) {
  for (const auto& e : BuiltinCorpus()) {
    const Json j = CorpusEntryToJson(e);
    EXPECT_EQ(CorpusEntryFromJson(Json::parse(j.dump())), e) << e.name;
    EXPECT_EQ(CorpusEntryToJson(CorpusEntryFromJson(j)).dump(), j.dump()) << e.name;
  }
}

TEST(CorpusTest, ShippedDirectoryMatchesBuiltin) {
  EXPECT_EQ(LoadCorpusDir(QFOLD_CORPUS_SOURCE_DIR), BuiltinCorpus());
}

TEST(CorpusTest, EnvironmentOverride) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "qfold_corpus_override_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  {
    std::ofstream out(dir / "tiny.json");
    out << R"({"name": "tiny", "vertices": ["x", "y"], "edges": [{"id": "h", "src": "x", "tgt": "y"}]})";
  }
  setenv("QFOLD_CORPUS_DIR", dir.c_str(), 1);
  const auto corpus = Corpus();
  unsetenv("QFOLD_CORPUS_DIR");
  ASSERT_EQ(corpus.size(), 1u);
  EXPECT_EQ(corpus[0].name, "tiny");
  EXPECT_TRUE(corpus[0].admissible);
  EXPECT_EQ(corpus[0].automorphism, DiagramAutomorphism::Identity(corpus[0].quiver));
  {
    std::ofstream out(dir / "bad.json");
    out << R"({"name": "bad", "admissible": false, "vertices": ["x"], "edges": []})";
  }
  EXPECT_THROW(LoadCorpusDir(dir.string()), Error);
  fs::remove_all(dir);
  EXPECT_THROW(LoadCorpusDir(dir.string()), Error);
}

TEST(QuiverJsonTest, VertexOrderIsCanonical) {
  const Json j = Json::parse(R"({"vertices": ["b", "a", "c"],
      "edges": [{"id": "e1", "src": "a", "tgt": "b"}, {"id": "e2", "src": "a", "tgt": "c"}],
      "automorphism": {"vertices": {"b": "c", "c": "b"}}})");
  const auto qa = QuiverFromJson(j);
  EXPECT_EQ(qa.quiver.vertex_id(0), "b");
  EXPECT_EQ(qa.automorphism.vertex(0), 2);
  EXPECT_EQ(qa.automorphism.edge(0), 1);
  EXPECT_EQ(QuiverFromJson(QuiverToJson(qa.quiver, qa.automorphism)).automorphism, qa.automorphism);
}

TEST(QuiverJsonTest, Errors) {
  EXPECT_THROW(QuiverFromJson(Json::parse(R"({"edges": []})")), Error);
  EXPECT_THROW(QuiverFromJson(Json::parse(R"({"vertices": [1], "edges": []})")), Error);
  EXPECT_THROW(QuiverFromJson(Json::parse(R"({"vertices": ["a"], "edges": [{"id": "e", "src": "a", "tgt": "z"}]})")),
               Error);
  // Parallel edges need an explicit edge map.
  EXPECT_THROW(QuiverFromJson(Json::parse(R"({"vertices": ["a", "b"],
      "edges": [{"id": "e", "src": "a", "tgt": "b"}, {"id": "f", "src": "a", "tgt": "b"}],
      "automorphism": {"vertices": {}}})")),
               Error);
  // Not compatible with incidence.
  EXPECT_THROW(QuiverFromJson(Json::parse(R"({"vertices": ["a", "b", "c"],
      "edges": [{"id": "e", "src": "a", "tgt": "b"}],
      "automorphism": {"vertices": {"a": "c", "c": "a"}}})")),
               Error);
  EXPECT_THROW(QuiverFromJson(Json::parse(R"({"vertices": ["a", "b"], "edges": [],
      "automorphism": {"vertices": {"a": "b"}, "edges": {"zz": "zz"}}})")),
               Error);
}

TEST(SplitJsonTest, LabelsAndSchema) {
  const auto e = FindCorpusEntry("D4-swap");
  const SplitData sd = SplitQuiver(e.quiver, e.automorphism);
  const Json j = SplitToJson(sd);
  ASSERT_EQ(j["labels"].size(), 5u);
  int halves = 0;
  for (const auto& [id, l] : j["labels"].items()) {
    if (l["e"] == 2) ++halves;
    EXPECT_EQ(l["phase"], std::to_string(l["j"].get<int>()) + "/" + std::to_string(l["e"].get<int>()));
  }
  EXPECT_EQ(halves, 4);
  const auto back = QuiverFromJson(j);
  EXPECT_EQ(back.quiver, sd.split);
  EXPECT_EQ(back.automorphism, sd.induced);
}

TEST(ModuleJsonTest, RoundTrip) {
  const Quiver q = families::D(4);
  const DoubledQuiver dq = BuildDoubled(q);
  Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    std::vector<int> v(4), w(4);
    for (int i = 0; i < 4; ++i) {
      v[i] = rng() % 3;
      w[i] = rng() % 2;
    }
    RationalModule m = RandomData<Rational>(dq, DimensionVector(v), DimensionVector(w), rng);
    if (v[0] > 0 && v[1] > 0) m.B[0](0, 0) = MakeRational(-7, 3);
    const Json j = ModuleToJson(dq, m);
    EXPECT_EQ(ModuleFromJson(dq, Json::parse(j.dump())), m);
  }
}

TEST(ModuleJsonTest, ParsesStringsAndRejectsShapes) {
  const DoubledQuiver dq = BuildDoubled(families::A(2));
  const Json j = Json::parse(R"({"v": [1, 1], "w": [1, 0],
      "B": [{"edge": "e1", "reverse": false, "matrix": [["1/2"]]},
            {"edge": "e1", "reverse": true, "matrix": [[-3]]}],
      "I": [[["2"]], [[]]], "J": [[["-1/4"]], []]})");
  const RationalModule m = ModuleFromJson(dq, j);
  EXPECT_EQ(m.B[0](0, 0), MakeRational(1, 2));
  EXPECT_EQ(m.B[1](0, 0), Rational(-3));
  EXPECT_EQ(m.J[0](0, 0), MakeRational(-1, 4));
  EXPECT_EQ(m.I[1].rows(), 1);
  EXPECT_EQ(m.I[1].cols(), 0);
  Json bad = j;
  bad["B"][0]["matrix"] = Json::parse(R"([["1", "2"]])");
  EXPECT_THROW(ModuleFromJson(dq, bad), Error);
  bad = j;
  bad["B"][0]["matrix"] = Json::parse(R"([["1/0"]])");
  EXPECT_THROW(ModuleFromJson(dq, bad), Error);
  bad = j;
  bad["B"][1]["reverse"] = false;
  EXPECT_THROW(ModuleFromJson(dq, bad), Error);
  bad = j;
  bad["v"] = Json::parse("[1, -1]");
  EXPECT_THROW(ModuleFromJson(dq, bad), Error);
}

TEST(DimensionVectorJsonTest, ArrayAndObject) {
  const Quiver q = families::A(3);
  EXPECT_EQ(DimensionVectorFromJson(q, Json::parse("[1, 2, 3]")), DimensionVector({1, 2, 3}));
  EXPECT_EQ(DimensionVectorFromJson(q, Json::parse(R"({"3": 4})")), DimensionVector({0, 0, 4}));
  EXPECT_THROW(DimensionVectorFromJson(q, Json::parse("[1, 2]")), Error);
  EXPECT_THROW(DimensionVectorFromJson(q, Json::parse(R"({"9": 1})")), Error);
}

}  // namespace
}  // namespace qfold
