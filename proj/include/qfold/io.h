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

// JSON schemas and the named-quiver corpus.
#ifndef QFOLD_IO_H_
#define QFOLD_IO_H_

#include <string>
#include <vector>

#include "json.hpp"
#include "qfold/dim_calc.h"
#include "qfold/module_lab.h"
#include "qfold/quiver.h"
#include "qfold/rep_branch.h"
#include "qfold/split_quotient.h"

namespace qfold {

using Json = nlohmann::ordered_json;

struct QuiverWithAutomorphism {
  Quiver quiver;
  DiagramAutomorphism automorphism;
};

// {"vertices": [...], "edges": [{"id","src","tgt"}],
//  "automorphism": {"vertices": {...}, "edges": {...}}}
Json QuiverToJson(const Quiver& q, const DiagramAutomorphism& a);
Json QuiverToJson(const Quiver& q);
// A missing "automorphism" reads as the identity. An automorphism without
// "edges" is completed with DiagramAutomorphism::FromVertexMap.
// Throws kParseError, plus the quiver and automorphism validation errors.
QuiverWithAutomorphism QuiverFromJson(const Json& j);

// Split quiver with its induced automorphism and
// "labels": {id: {"orbit": k, "j": j, "e": e, "phase": "j/e"}}.
Json SplitToJson(const SplitData& sd);

Json MatrixToJson(const RationalMatrix& m);
RationalMatrix MatrixFromJson(const Json& j, int rows, int cols);

// {"v": [...], "w": [...], "B": [{"edge", "reverse", "matrix"}], "I": [...],
//  "J": [...]} with entries as "p/q" strings, rows first.
Json ModuleToJson(const DoubledQuiver& dq, const RationalModule& m);
RationalModule ModuleFromJson(const DoubledQuiver& dq, const Json& j);
// One square matrix per vertex, in vertex order.
Json MapsToJson(const RationalMaps& g);
RationalMaps MapsFromJson(const Json& j, const DimensionVector& dims);

DimensionVector DimensionVectorFromJson(const Quiver& q, const Json& j);

Json ComponentsToJson(const Quiver& split, const std::vector<ComponentRecord>& records);
Json BranchToJson(const std::vector<BranchTerm>& terms);

struct CorpusEntry {
  std::string name;
  Quiver quiver;
  DiagramAutomorphism automorphism;
  bool admissible = false;

  friend bool operator==(const CorpusEntry&, const CorpusEntry&) = default;
};

// The quiver schema plus "name" and "admissible".
Json CorpusEntryToJson(const CorpusEntry& e);
// Throws kParseError when a stored "admissible" flag disagrees.
CorpusEntry CorpusEntryFromJson(const Json& j);

std::vector<CorpusEntry> BuiltinCorpus();
// Every *.json file of `dir`, sorted by name.
std::vector<CorpusEntry> LoadCorpusDir(const std::string& dir);
// QFOLD_CORPUS_DIR when set, else the built-in list.
std::vector<CorpusEntry> Corpus();
// Throws kParseError for an unknown name.
CorpusEntry FindCorpusEntry(const std::string& name);

}  // namespace qfold

#endif  // QFOLD_IO_H_
