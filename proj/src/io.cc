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

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>

#include "qfold/error.h"

namespace qfold {

namespace {

[[noreturn]] void ParseFail(const std::string& what) { throw Error(ErrorCode::kParseError, what); }

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) ParseFail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string AsString(const Json& j, const char* what) {
  if (!j.is_string()) ParseFail(std::string(what) + " must be a string");
  return j.get<std::string>();
}

int AsInt(const Json& j, const char* what) {
  if (!j.is_number_integer()) ParseFail(std::string(what) + " must be an integer");
  return j.get<int>();
}

Json VectorToJson(const std::vector<int>& v) {
  Json out = Json::array();
  for (int x : v) out.push_back(x);
  return out;
}

}  // namespace

Json QuiverToJson(const Quiver& q) {
  Json out;
  out["vertices"] = q.vertices();
  Json edges = Json::array();
  for (const Edge& e : q.edges()) {
    edges.push_back({{"id", e.id}, {"src", q.vertex_id(e.src)}, {"tgt", q.vertex_id(e.tgt)}});
  }
  out["edges"] = std::move(edges);
  return out;
}

Json QuiverToJson(const Quiver& q, const DiagramAutomorphism& a) {
  Json out = QuiverToJson(q);
  Json vmap = Json::object(), emap = Json::object();
  for (int v = 0; v < q.num_vertices(); ++v) vmap[q.vertex_id(v)] = q.vertex_id(a.vertex(v));
  for (int e = 0; e < q.num_edges(); ++e) emap[q.edge(e).id] = q.edge(a.edge(e)).id;
  out["automorphism"] = {{"vertices", std::move(vmap)}, {"edges", std::move(emap)}};
  return out;
}

QuiverWithAutomorphism QuiverFromJson(const Json& j) {
  const Json& jv = Field(j, "vertices");
  const Json& je = Field(j, "edges");
  if (!jv.is_array() || !je.is_array()) ParseFail("\"vertices\" and \"edges\" must be arrays");
  std::vector<std::string> vertices;
  for (const Json& x : jv) vertices.push_back(AsString(x, "vertex id"));
  std::vector<EdgeSpec> edges;
  for (const Json& x : je) {
    edges.push_back({AsString(Field(x, "id"), "edge id"), AsString(Field(x, "src"), "edge src"),
                     AsString(Field(x, "tgt"), "edge tgt")});
  }
  QuiverWithAutomorphism out{Quiver(std::move(vertices), edges), {}};
  const Quiver& q = out.quiver;
  if (!j.contains("automorphism")) {
    out.automorphism = DiagramAutomorphism::Identity(q);
    return out;
  }
  const Json& ja = j.at("automorphism");
  const Json& av = Field(ja, "vertices");
  if (!av.is_object()) ParseFail("automorphism \"vertices\" must be an object");
  std::vector<int> vperm(q.num_vertices());
  std::iota(vperm.begin(), vperm.end(), 0);
  for (const auto& [from, to] : av.items()) {
    vperm[q.VertexIndex(from)] = q.VertexIndex(AsString(to, "automorphism vertex image"));
  }
  if (!ja.contains("edges")) {
    out.automorphism = DiagramAutomorphism::FromVertexMap(q, std::move(vperm));
  } else {
    const Json& ae = ja.at("edges");
    if (!ae.is_object()) ParseFail("automorphism \"edges\" must be an object");
    std::vector<int> eperm(q.num_edges());
    std::iota(eperm.begin(), eperm.end(), 0);
    auto edge_index = [&](const std::string& id) {
      auto e = q.FindEdge(id);
      if (!e) ParseFail("unknown edge \"" + id + "\"");
      return *e;
    };
    for (const auto& [from, to] : ae.items()) {
      eperm[edge_index(from)] = edge_index(AsString(to, "automorphism edge image"));
    }
    out.automorphism = DiagramAutomorphism(std::move(vperm), std::move(eperm));
  }
  CheckAutomorphism(q, out.automorphism);
  return out;
}

Json SplitToJson(const SplitData& sd) {
  Json out = QuiverToJson(sd.split, sd.induced);
  Json labels = Json::object();
  for (int x = 0; x < sd.split.num_vertices(); ++x) {
    const SplitVertex& l = sd.labels[x];
    labels[sd.split.vertex_id(x)] = {{"orbit", l.orbit},
                                     {"j", l.j},
                                     {"e", l.e},
                                     {"phase", std::to_string(l.j) + "/" + std::to_string(l.e)}};
  }
  out["labels"] = std::move(labels);
  return out;
}

Json MatrixToJson(const RationalMatrix& m) {
  Json out = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(ToString(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

RationalMatrix MatrixFromJson(const Json& j, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows) {
    ParseFail("expected a matrix with " + std::to_string(rows) + " rows");
  }
  RationalMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const Json& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != cols) {
      ParseFail("expected " + std::to_string(cols) + " columns in row " + std::to_string(r));
    }
    for (int c = 0; c < cols; ++c) {
      if (row[c].is_number_integer()) {
        m(r, c) = Rational(row[c].get<long>());
      } else {
        m(r, c) = ParseRational(AsString(row[c], "matrix entry"));
      }
    }
  }
  return m;
}

DimensionVector DimensionVectorFromJson(const Quiver& q, const Json& j) {
  if (j.is_array()) {
    if (static_cast<int>(j.size()) != q.num_vertices()) {
      ParseFail("dimension vector needs " + std::to_string(q.num_vertices()) + " entries");
    }
    std::vector<int> v;
    for (const Json& x : j) {
      v.push_back(AsInt(x, "dimension"));
      if (v.back() < 0) ParseFail("dimensions must be nonnegative");
    }
    return DimensionVector(std::move(v));
  }
  if (j.is_object()) {
    std::vector<std::pair<std::string, int>> m;
    for (const auto& [k, x] : j.items()) {
      m.emplace_back(k, AsInt(x, "dimension"));
      if (m.back().second < 0) ParseFail("dimensions must be nonnegative");
    }
    return DimensionVector::FromMap(q, m);
  }
  ParseFail("dimension vector must be an array or an object");
}

Json ModuleToJson(const DoubledQuiver& dq, const RationalModule& m) {
  Json out;
  out["v"] = VectorToJson(m.v.values());
  out["w"] = VectorToJson(m.w.values());
  Json b = Json::array();
  for (int h = 0; h < dq.num_arrows(); ++h) {
    b.push_back({{"edge", dq.base.edge(dq.arrows[h].edge).id},
                 {"reverse", h % 2 == 1},
                 {"matrix", MatrixToJson(m.B[h])}});
  }
  out["B"] = std::move(b);
  Json ji = Json::array(), jj = Json::array();
  for (const auto& x : m.I) ji.push_back(MatrixToJson(x));
  for (const auto& x : m.J) jj.push_back(MatrixToJson(x));
  out["I"] = std::move(ji);
  out["J"] = std::move(jj);
  return out;
}

RationalModule ModuleFromJson(const DoubledQuiver& dq, const Json& j) {
  const Quiver& q = dq.base;
  const DimensionVector v = DimensionVectorFromJson(q, Field(j, "v"));
  const DimensionVector w = DimensionVectorFromJson(q, Field(j, "w"));
  RationalModule m = RationalModule::Zero(dq, v, w);
  if (j.contains("B")) {
    const Json& b = j.at("B");
    if (!b.is_array()) ParseFail("\"B\" must be an array");
    std::vector<bool> seen(dq.num_arrows(), false);
    for (const Json& x : b) {
      const std::string id = AsString(Field(x, "edge"), "arrow edge");
      const auto e = q.FindEdge(id);
      if (!e) ParseFail("unknown edge \"" + id + "\"");
      const Json& rev = Field(x, "reverse");
      if (!rev.is_boolean()) ParseFail("\"reverse\" must be a boolean");
      const int h = 2 * *e + (rev.get<bool>() ? 1 : 0);
      if (seen[h]) ParseFail("arrow given twice: " + id);
      seen[h] = true;
      const Arrow& arrow = dq.arrows[h];
      m.B[h] = MatrixFromJson(Field(x, "matrix"), v[arrow.tgt], v[arrow.src]);
    }
  }
  auto read_list = [&](const char* key, bool is_i) {
    if (!j.contains(key)) return;
    const Json& list = j.at(key);
    if (!list.is_array() || static_cast<int>(list.size()) != q.num_vertices()) {
      ParseFail(std::string("\"") + key + "\" needs one matrix per vertex");
    }
    for (int i = 0; i < q.num_vertices(); ++i) {
      if (is_i) {
        m.I[i] = MatrixFromJson(list[i], v[i], w[i]);
      } else {
        m.J[i] = MatrixFromJson(list[i], w[i], v[i]);
      }
    }
  };
  read_list("I", true);
  read_list("J", false);
  return m;
}

Json MapsToJson(const RationalMaps& g) {
  Json out = Json::array();
  for (const auto& x : g) out.push_back(MatrixToJson(x));
  return out;
}

RationalMaps MapsFromJson(const Json& j, const DimensionVector& dims) {
  if (!j.is_array() || static_cast<int>(j.size()) != dims.size()) {
    ParseFail("expected one matrix per vertex");
  }
  RationalMaps g;
  for (int i = 0; i < dims.size(); ++i) g.push_back(MatrixFromJson(j[i], dims[i], dims[i]));
  return g;
}

Json ComponentsToJson(const Quiver& split, const std::vector<ComponentRecord>& records) {
  Json out = Json::array();
  for (const auto& r : records) {
    Json v = Json::object(), w = Json::object();
    for (int x = 0; x < split.num_vertices(); ++x) {
      v[split.vertex_id(x)] = r.v_split[x];
      w[split.vertex_id(x)] = r.w_split[x];
    }
    out.push_back({{"v_split", std::move(v)}, {"w_split", std::move(w)}, {"dim", r.dim}, {"empty", r.empty}});
  }
  return out;
}

Json BranchToJson(const std::vector<BranchTerm>& terms) {
  Json out = Json::array();
  for (const auto& t : terms) {
    out.push_back({{"weight", VectorToJson(t.weight)}, {"multiplicity", t.multiplicity}});
  }
  return out;
}

Json CorpusEntryToJson(const CorpusEntry& e) {
  Json out;
  out["name"] = e.name;
  out["admissible"] = e.admissible;
  const Json body = QuiverToJson(e.quiver, e.automorphism);
  for (const auto& [k, x] : body.items()) out[k] = x;
  return out;
}

CorpusEntry CorpusEntryFromJson(const Json& j) {
  QuiverWithAutomorphism qa = QuiverFromJson(j);
  CorpusEntry e{AsString(Field(j, "name"), "name"), std::move(qa.quiver), std::move(qa.automorphism), false};
  e.admissible = IsAdmissible(e.quiver, e.automorphism);
  if (j.contains("admissible")) {
    const Json& flag = j.at("admissible");
    if (!flag.is_boolean() || flag.get<bool>() != e.admissible) {
      ParseFail("entry \"" + e.name + "\": stored admissible flag disagrees with the automorphism");
    }
  }
  return e;
}

std::vector<CorpusEntry> BuiltinCorpus() {
  using namespace families;
  std::vector<CorpusEntry> out;
  auto add = [&](std::string name, Quiver q, DiagramAutomorphism a) {
    CheckAutomorphism(q, a);
    const bool adm = IsAdmissible(q, a);
    out.push_back({std::move(name), std::move(q), std::move(a), adm});
  };
  auto by_vertices = [](const Quiver& q, std::vector<int> perm) {
    return DiagramAutomorphism::FromVertexMap(q, std::move(perm));
  };
  {
    Quiver q = A(1);
    add("A1-id", q, DiagramAutomorphism::Identity(q));
  }
  for (int n : {3, 4, 5, 7, 9}) {
    Quiver q = A(n);
    add("A" + std::to_string(n) + "-flip", q, AFlip(q));
  }
  for (int n : {4, 5, 6}) {
    Quiver q = D(n);
    add("D" + std::to_string(n) + "-swap", q, DForkSwap(q));
  }
  {
    Quiver q = D(4);
    add("D4-triality", q, by_vertices(q, {2, 1, 3, 0}));
  }
  {
    Quiver q = AffineA(1);
    // Both vertices fixed, the two parallel edges exchanged.
    add("affineA1-swap", q, DiagramAutomorphism({0, 1}, {1, 0}));
  }
  {
    Quiver q = AffineA(3);
    add("affineA3-refl", q, by_vertices(q, {0, 3, 2, 1}));
    add("affineA3-rot", q, by_vertices(q, {1, 2, 3, 0}));
  }
  {
    Quiver q = AffineA(5);
    add("affineA5-refl", q, by_vertices(q, {0, 5, 4, 3, 2, 1}));
  }
  {
    Quiver q = AffineD(4);
    add("affineD4-swap", q, by_vertices(q, {1, 0, 2, 3, 4}));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.name < y.name; });
  return out;
}

std::vector<CorpusEntry> LoadCorpusDir(const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) ParseFail("corpus directory not found: " + dir);
  std::vector<fs::path> files;
  for (const auto& f : fs::directory_iterator(dir)) {
    if (f.is_regular_file() && f.path().extension() == ".json") files.push_back(f.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> out;
  for (const auto& path : files) {
    std::ifstream in(path);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::parse_error& e) {
      ParseFail(path.string() + ": " + e.what());
    }
    out.push_back(CorpusEntryFromJson(j));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.name < y.name; });
  return out;
}

std::vector<CorpusEntry> Corpus() {
  const char* dir = std::getenv("QFOLD_CORPUS_DIR");
  if (dir != nullptr && *dir != '\0') return LoadCorpusDir(dir);
  return BuiltinCorpus();
}

CorpusEntry FindCorpusEntry(const std::string& name) {
  for (auto& e : Corpus()) {
    if (e.name == name) return e;
  }
  ParseFail("no corpus entry named \"" + name + "\"");
}

}  // namespace qfold
