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

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "qfold/dim_calc.h"
#include "qfold/error.h"
#include "qfold/io.h"
#include "qfold/lie_fold.h"
#include "qfold/module_lab.h"
#include "qfold/rep_branch.h"
#include "qfold/split_quotient.h"
#include "verify_all.h"

namespace qfold {

namespace {

struct Globals {
  bool json = false;
  uint64_t seed = 0;
};

struct Source {
  std::string corpus;
  std::string input;
};

// Rows of strings printed with columns padded to a common width.
class Table {
 public:
  explicit Table(std::vector<std::string> header) { rows_.push_back(std::move(header)); }
  void Add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void Print(std::ostream& out) const {
    std::vector<size_t> width;
    for (const auto& r : rows_) {
      width.resize(std::max(width.size(), r.size()), 0);
      for (size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    }
    for (const auto& r : rows_) {
      std::string line;
      for (size_t c = 0; c < r.size(); ++c) {
        line += r[c];
        if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
      }
      line.erase(line.find_last_not_of(' ') + 1);
      out << line << "\n";
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string Tuple(const std::vector<int>& v) {
  std::string s = "(";
  for (size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

std::string MatrixText(const RationalMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return "[] " + m.ShapeString();
  std::string s = "[";
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) s += (c ? " " : "") + ToString(m(r, c));
    if (r + 1 < m.rows()) s += "; ";
  }
  return s + "]";
}

Json ReadJson(const std::string& path, std::istream& in) {
  try {
    if (path == "-") return Json::parse(in);
    std::ifstream file(path);
    if (!file) throw Error(ErrorCode::kParseError, "cannot open " + path);
    return Json::parse(file);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParseError, path + ": " + e.what());
  }
}

void AddSource(CLI::App* app, Source& src) {
  auto* c = app->add_option("--corpus", src.corpus, "named corpus entry");
  auto* i = app->add_option("--input", src.input, "quiver JSON file, - for stdin");
  c->excludes(i);
}

struct Loaded {
  std::string name;
  Quiver quiver;
  DiagramAutomorphism automorphism;
};

Loaded Load(const Source& src, std::istream& in) {
  if (!src.corpus.empty()) {
    CorpusEntry e = FindCorpusEntry(src.corpus);
    return {e.name, std::move(e.quiver), std::move(e.automorphism)};
  }
  if (src.input.empty()) throw Error(ErrorCode::kParseError, "one of --corpus or --input is required");
  QuiverWithAutomorphism qa = QuiverFromJson(ReadJson(src.input, in));
  return {src.input == "-" ? "<stdin>" : src.input, std::move(qa.quiver), std::move(qa.automorphism)};
}

DimensionVector ParseDims(const Quiver& q, const std::string& text) {
  if (!text.empty() && (text.front() == '[' || text.front() == '{')) {
    try {
      return DimensionVectorFromJson(q, Json::parse(text));
    } catch (const Json::parse_error& e) {
      throw Error(ErrorCode::kParseError, e.what());
    }
  }
  Json arr = Json::array();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      arr.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::kParseError, "bad dimension entry \"" + item + "\"");
    }
  }
  return DimensionVectorFromJson(q, arr);
}

std::string TypeOf(const Quiver& q) { return ClassifyCartan(CartanFromQuiver(q)).ToString(); }

void PrintEdges(const Quiver& q, std::ostream& out) {
  Table t({"edge", "src", "tgt"});
  for (const Edge& e : q.edges()) t.Add({e.id, q.vertex_id(e.src), q.vertex_id(e.tgt)});
  t.Print(out);
}

// --- split / quotient / fold -----------------------------------------------

int RunSplit(const Globals& g, const Source& src, std::istream& in, std::ostream& out) {
  const Loaded l = Load(src, in);
  const SplitData sd = SplitQuiver(l.quiver, l.automorphism);
  if (g.json) {
    out << SplitToJson(sd).dump(2) << "\n";
    return kExitOk;
  }
  out << "split of " << l.name << ": " << TypeOf(l.quiver) << " -> " << TypeOf(sd.split) << "\n\n";
  Table t({"vertex", "orbit", "phase", "a'(vertex)"});
  for (int x = 0; x < sd.split.num_vertices(); ++x) {
    const SplitVertex& lab = sd.labels[x];
    t.Add({sd.split.vertex_id(x), l.quiver.vertex_id(sd.Lift(lab.orbit)),
           std::to_string(lab.j) + "/" + std::to_string(lab.e), sd.split.vertex_id(sd.induced.vertex(x))});
  }
  t.Print(out);
  out << "\n";
  PrintEdges(sd.split, out);
  return kExitOk;
}

int RunQuotient(const Globals& g, const Source& src, std::istream& in, std::ostream& out) {
  const Loaded l = Load(src, in);
  const Quiver qq = QuotientQuiver(l.quiver, l.automorphism);
  const OrbitData od = ComputeOrbitData(l.quiver, l.automorphism);
  if (g.json) {
    Json j = QuiverToJson(qq);
    Json labels = Json::object();
    for (int k = 0; k < od.num_vertex_orbits(); ++k) {
      Json members = Json::array();
      for (int v : od.vertex_orbits[k]) members.push_back(l.quiver.vertex_id(v));
      const int rep = od.vertex_orbits[k].front();
      labels[qq.vertex_id(k)] = {
          {"orbit", k}, {"members", std::move(members)}, {"d", od.vertex_orbit_size[rep]}, {"e", od.vertex_e[rep]}};
    }
    j["labels"] = std::move(labels);
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "quotient of " << l.name << " (n = " << od.n << ")\n\n";
  Table t({"vertex", "orbit size d", "e"});
  for (int k = 0; k < od.num_vertex_orbits(); ++k) {
    const int rep = od.vertex_orbits[k].front();
    t.Add({qq.vertex_id(k), std::to_string(od.vertex_orbit_size[rep]), std::to_string(od.vertex_e[rep])});
  }
  t.Print(out);
  out << "\n";
  PrintEdges(qq, out);
  return kExitOk;
}

int RunFold(const Globals& g, const Source& src, std::istream& in, std::ostream& out) {
  const Loaded l = Load(src, in);
  const CartanMatrix c = CartanFromQuiver(l.quiver);
  const SplitData sd = SplitQuiver(l.quiver, l.automorphism);
  const FoldedAlgebraData fold = FoldCartan(c, l.automorphism.vertex_perm());
  const std::string base = ClassifyCartan(c).ToString();
  const std::string split = TypeOf(sd.split);
  const std::string folded = ClassifyCartan(fold.folded).ToString();
  if (g.json) {
    Json j;
    j["base_type"] = base;
    j["split_type"] = split;
    j["folded_type"] = folded;
    j["folded_cartan"] = fold.folded.entries();
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  Table t({"base type", "split type", "folded type"});
  t.Add({base, split, folded});
  t.Print(out);
  out << "\nfolded Cartan matrix, c(i,j) = alpha_i(h_j)\n";
  Table m({"orbit"});
  for (size_t k = 0; k < fold.orbits.size(); ++k) {
    std::vector<std::string> row;
    std::string members;
    for (int v : fold.orbits[k]) members += (members.empty() ? "" : ",") + l.quiver.vertex_id(v);
    row.push_back("{" + members + "}");
    for (int x : fold.folded.entries()[k]) row.push_back(std::to_string(x));
    m.Add(std::move(row));
  }
  m.Print(out);
  return kExitOk;
}

// --- branch / dims ----------------------------------------------------------

struct BranchArgs {
  std::string framing;
  int64_t cap = kDefaultDimensionCap;
};

int RunBranch(const Globals& g, const Source& src, const BranchArgs& a, std::istream& in, std::ostream& out) {
  const Loaded l = Load(src, in);
  const CartanMatrix c = CartanFromQuiver(l.quiver);
  const FoldedAlgebraData fold = FoldCartan(c, l.automorphism.vertex_perm());
  const Weight lambda = HighestWeightFromFraming(ParseDims(l.quiver, a.framing));
  const std::vector<BranchTerm> terms = Branch(c, lambda, fold, a.cap);
  const int64_t source_dim = WeylDimension(c, lambda, a.cap);
  int64_t branched = 0;
  std::vector<int64_t> dims;
  for (const auto& t : terms) {
    dims.push_back(WeylDimension(fold.folded, t.weight, a.cap));
    branched += t.multiplicity * dims.back();
  }
  const bool conserved = branched == source_dim;
  if (g.json) {
    Json j;
    j["highest_weight"] = lambda;
    j["base_type"] = ClassifyCartan(c).ToString();
    j["folded_type"] = ClassifyCartan(fold.folded).ToString();
    Json jt = BranchToJson(terms);
    for (size_t k = 0; k < terms.size(); ++k) jt[k]["dimension"] = dims[k];
    j["terms"] = std::move(jt);
    j["dimension"] = {{"source", source_dim}, {"branched", branched}, {"conserved", conserved}};
    out << j.dump(2) << "\n";
  } else {
    out << ClassifyCartan(c).ToString() << " > " << ClassifyCartan(fold.folded).ToString()
        << ", highest weight " << Tuple(lambda) << "\n\n";
    Table t({"folded weight", "multiplicity", "dimension"});
    for (size_t k = 0; k < terms.size(); ++k) {
      t.Add({Tuple(terms[k].weight), std::to_string(terms[k].multiplicity), std::to_string(dims[k])});
    }
    t.Print(out);
    out << "\ndimension " << source_dim << " = " << branched << (conserved ? " (conserved)" : " (NOT conserved)")
        << "\n";
  }
  return conserved ? kExitOk : kExitViolation;
}

struct DimsArgs {
  std::string v, w, w_split;
};

int RunDims(const Globals& g, const Source& src, const DimsArgs& a, std::istream& in, std::ostream& out) {
  const Loaded l = Load(src, in);
  const SplitData sd = SplitQuiver(l.quiver, l.automorphism);
  const DimensionVector v = ParseDims(l.quiver, a.v);
  DimensionVector ws;
  if (!a.w_split.empty()) {
    ws = ParseDims(sd.split, a.w_split);
  } else {
    const DimensionVector w = a.w.empty() ? DimensionVector::Zero(l.quiver.num_vertices()) : ParseDims(l.quiver, a.w);
    std::vector<RationalMatrix> sigma;
    for (int i = 0; i < w.size(); ++i) sigma.push_back(RationalMatrix::Identity(w[i]));
    ws = SplitFraming(w, sigma, sd);
  }
  const auto records = FixedComponents(v, sd, ws);
  if (g.json) {
    out << ComponentsToJson(sd.split, records).dump(2) << "\n";
    return kExitOk;
  }
  std::string order;
  for (const auto& id : sd.split.vertices()) order += (order.empty() ? "" : ",") + id;
  out << "components over v = " << Tuple(v.values()) << ", split vertices (" << order << ")\n";
  out << "w' = " << Tuple(ws.values()) << "\n\n";
  Table t({"v'", "dim", "note"});
  for (const auto& r : records) {
    t.Add({Tuple(r.v_split.values()), std::to_string(r.dim), r.empty ? "empty (formula negative)" : ""});
  }
  t.Print(out);
  return kExitOk;
}

// --- module -----------------------------------------------------------------

struct ModuleArgs {
  std::string mode = "signed";
  std::string module;
  std::string sigma;
  std::string g;
  std::string instance;
  std::string v, v_sub, w;
  int count = 1;
};

RelationMode ModeOf(const ModuleArgs& a) {
  return a.mode == "unsigned" ? RelationMode::kUnsigned : RelationMode::kSigned;
}

RationalMaps Identities(const DimensionVector& d) {
  RationalMaps out;
  for (int i = 0; i < d.size(); ++i) out.push_back(RationalMatrix::Identity(d[i]));
  return out;
}

RationalModule LoadModule(const ThetaContext& ctx, const ModuleArgs& a, std::istream& in) {
  if (a.module.empty()) throw Error(ErrorCode::kParseError, "--module is required");
  RationalModule m = ModuleFromJson(ctx.dq, ReadJson(a.module, in));
  CheckShapes(ctx.dq, m);
  return m;
}

// sigma_i : W_i -> W_a(i); identity when no file is given.
RationalMaps LoadSigma(const ThetaContext& ctx, const ModuleArgs& a, const DimensionVector& w, std::istream& in) {
  CheckOrbitConstant(ctx, w, w);
  RationalMaps sigma = a.sigma.empty() ? Identities(w) : MapsFromJson(ReadJson(a.sigma, in), w);
  CheckSigma(ctx, w, sigma);
  return sigma;
}

void PrintModuleText(const Quiver& q, const DoubledQuiver& dq, const RationalModule& m, std::ostream& out) {
  out << "v " << Tuple(m.v.values()) << "  w " << Tuple(m.w.values()) << "\n";
  Table t({"map", "matrix"});
  for (int h = 0; h < dq.num_arrows(); ++h) {
    t.Add({"B " + q.edge(dq.arrows[h].edge).id + (h % 2 ? "*" : ""), MatrixText(m.B[h])});
  }
  for (int i = 0; i < q.num_vertices(); ++i) t.Add({"I " + q.vertex_id(i), MatrixText(m.I[i])});
  for (int i = 0; i < q.num_vertices(); ++i) t.Add({"J " + q.vertex_id(i), MatrixText(m.J[i])});
  t.Print(out);
}

void PrintMapsText(const Quiver& q, const RationalMaps& g, std::ostream& out) {
  Table t({"vertex", "matrix"});
  for (int i = 0; i < q.num_vertices(); ++i) t.Add({q.vertex_id(i), MatrixText(g[i])});
  t.Print(out);
}

int RunModuleCheck(const Globals& gl, const Source& src, const ModuleArgs& a, std::istream& in,
                   std::ostream& out) {
  const Loaded l = Load(src, in);
  const ThetaContext ctx = MakeThetaContext(l.quiver, l.automorphism, ModeOf(a));
  const RationalModule m = LoadModule(ctx, a, in);
  const RelationResult rel = CheckRelations(ctx.dq, m, ModeOf(a));
  const std::optional<bool> stable = rel.ok ? std::optional<bool>(IsStable(ctx.dq, m, ModeOf(a))) : std::nullopt;
  if (gl.json) {
    Json j;
    j["relations"] = rel.ok;
    j["violating_vertex"] = rel.ok ? Json(nullptr) : Json(l.quiver.vertex_id(rel.vertex));
    j["stable"] = stable ? Json(*stable) : Json(nullptr);
    out << j.dump(2) << "\n";
  } else {
    Table t({"property", "result"});
    t.Add({"relations", rel.ok ? "hold" : "violated at vertex " + l.quiver.vertex_id(rel.vertex)});
    t.Add({"stable", stable ? (*stable ? "yes" : "no") : "n/a"});
    t.Print(out);
  }
  return rel.ok && stable.value_or(false) ? kExitOk : kExitViolation;
}

int RunModuleTheta(const Globals& gl, const Source& src, const ModuleArgs& a, std::istream& in,
                   std::ostream& out) {
  const Loaded l = Load(src, in);
  const ThetaContext ctx = MakeThetaContext(l.quiver, l.automorphism, ModeOf(a));
  const RationalModule m = LoadModule(ctx, a, in);
  const RationalModule t = ApplyTheta(ctx, m, LoadSigma(ctx, a, m.w, in));
  if (gl.json) {
    out << ModuleToJson(ctx.dq, t).dump(2) << "\n";
  } else {
    PrintModuleText(l.quiver, ctx.dq, t, out);
  }
  return kExitOk;
}

int RunModuleTransition(const Globals& gl, const Source& src, const ModuleArgs& a, std::istream& in,
                        std::ostream& out) {
  const Loaded l = Load(src, in);
  const ThetaContext ctx = MakeThetaContext(l.quiver, l.automorphism, ModeOf(a));
  const RationalModule m = LoadModule(ctx, a, in);
  const RationalMaps sigma = LoadSigma(ctx, a, m.w, in);
  const auto g = FindTransition(ctx, m, sigma);
  const bool ok = g && VerifyTransition(ctx, m, sigma, *g);
  if (gl.json) {
    Json j;
    j["theta_stable"] = ok;
    j["transition"] = ok ? MapsToJson(*g) : Json(nullptr);
    out << j.dump(2) << "\n";
  } else if (ok) {
    out << "theta(M) = g M with\n";
    PrintMapsText(l.quiver, *g, out);
  } else {
    out << "no transition: M is not theta-stable\n";
  }
  return ok ? kExitOk : kExitViolation;
}

Json ProfileJson(const EigenProfile& p) {
  Json pieces = Json::array();
  for (const auto& x : p.pieces) pieces.push_back({{"j", x.j}, {"dimension", x.dimension}});
  return {{"pieces", std::move(pieces)}, {"outside", p.outside}};
}

int RunModuleWitness(const Globals& gl, const Source& src, const ModuleArgs& a, std::istream& in,
                     std::ostream& out) {
  const Loaded l = Load(src, in);
  const ThetaContext ctx = MakeThetaContext(l.quiver, l.automorphism, ModeOf(a));
  const RationalModule m1 = LoadModule(ctx, a, in);
  RationalMaps g;
  if (a.g.empty()) {
    for (int i = 0; i < m1.v.size(); ++i) g.push_back(RationalMatrix::Identity(m1.v[i]) * Rational(2));
  } else {
    g = MapsFromJson(ReadJson(a.g, in), m1.v);
  }
  const RationalMaps sigma = a.sigma.empty() ? Identities(m1.w) : MapsFromJson(ReadJson(a.sigma, in), m1.w);
  const ThetaWitness tw = BuildThetaWitness(ctx, m1, g, sigma);
  const bool verified = VerifyTransition(ctx, tw.module, tw.sigma, tw.witness);
  if (gl.json) {
    Json j;
    j["verified"] = verified;
    j["block_diagonal_verifies"] = tw.block_diagonal_verifies;
    j["m1_check_skipped"] = tw.m1_check_skipped;
    j["module"] = ModuleToJson(ctx.dq, tw.module);
    j["witness"] = MapsToJson(tw.witness);
    Json fixed = Json::array();
    for (const auto& r : tw.fixed_vertices) {
      fixed.push_back({{"vertex", l.quiver.vertex_id(r.vertex)}, {"e", r.e}, {"profile", ProfileJson(r.profile)}});
    }
    j["fixed_vertices"] = std::move(fixed);
    out << j.dump(2) << "\n";
  } else {
    out << "witness " << (verified ? "verifies" : "does NOT verify") << "; block-diagonal form "
        << (tw.block_diagonal_verifies ? "also verifies" : "does not verify") << "\n\n";
    PrintMapsText(l.quiver, tw.witness, out);
    out << "\n";
    Table t({"fixed vertex", "e", "eigenvalue dimensions (zeta_e^j)", "outside"});
    for (const auto& r : tw.fixed_vertices) {
      std::string dims;
      for (const auto& p : r.profile.pieces) dims += (dims.empty() ? "" : " ") + std::to_string(p.j) + ":" + std::to_string(p.dimension);
      t.Add({l.quiver.vertex_id(r.vertex), std::to_string(r.e), dims, std::to_string(r.profile.outside)});
    }
    t.Print(out);
  }
  return verified ? kExitOk : kExitViolation;
}

int RunModuleTheorem5(const Globals& gl, const Source& src, const ModuleArgs& a, std::istream& in,
                      std::ostream& out) {
  const Loaded l = Load(src, in);
  const ThetaContext ctx = MakeThetaContext(l.quiver, l.automorphism, ModeOf(a));
  std::vector<Theorem5Instance> instances;
  if (!a.instance.empty()) {
    const Json j = ReadJson(a.instance, in);
    Theorem5Instance x;
    x.sub = ModuleFromJson(ctx.dq, j.at("sub"));
    x.m = ModuleFromJson(ctx.dq, j.at("module"));
    x.xi.clear();
    for (int i = 0; i < l.quiver.num_vertices(); ++i) {
      x.xi.push_back(MatrixFromJson(j.at("xi").at(i), x.m.v[i], x.sub.v[i]));
    }
    x.g_sub = MapsFromJson(j.at("g_sub"), x.sub.v);
    x.g = MapsFromJson(j.at("g"), x.m.v);
    x.sigma = MapsFromJson(j.at("sigma"), x.m.w);
    instances.push_back(std::move(x));
  } else {
    if (a.v.empty() || a.v_sub.empty()) {
      throw Error(ErrorCode::kParseError, "give --instance, or --v and --v-sub to generate pairs");
    }
    const DimensionVector v = ParseDims(l.quiver, a.v), v_sub = ParseDims(l.quiver, a.v_sub);
    DimensionVector w;
    if (a.w.empty()) {
      std::vector<int> x = v.values();
      for (int& k : x) ++k;
      w = DimensionVector(std::move(x));
    } else {
      w = ParseDims(l.quiver, a.w);
    }
    for (int k = 0; k < a.count; ++k) {
      std::seed_seq seq{static_cast<uint32_t>(gl.seed), static_cast<uint32_t>(gl.seed >> 32), static_cast<uint32_t>(k)};
      Rng rng(seq);
      instances.push_back(GenerateTheorem5Instance(ctx, v_sub, v, w, rng));
    }
  }
  bool all = true;
  Json results = Json::array();
  Table t({"pair", "result", "detail"});
  for (size_t k = 0; k < instances.size(); ++k) {
    const auto& x = instances[k];
    const Theorem5Result r = Theorem5Verify(ctx, x.xi, x.sub, x.g_sub, x.m, x.g, x.sigma);
    all = all && r.ok;
    std::string detail = r.ok ? "eigenspaces respected" : "vertex " + l.quiver.vertex_id(r.vertex) +
                                                              ", eigenvalue zeta^" + std::to_string(r.j);
    results.push_back({{"ok", r.ok},
                       {"vertex", r.ok ? Json(nullptr) : Json(l.quiver.vertex_id(r.vertex))},
                       {"j", r.ok ? Json(nullptr) : Json(r.j)}});
    t.Add({std::to_string(k), r.ok ? "ok" : "FAIL", detail});
  }
  if (gl.json) {
    out << results.dump(2) << "\n";
  } else {
    t.Print(out);
  }
  return all ? kExitOk : kExitViolation;
}

// --- verify-all -------------------------------------------------------------

int RunVerifyAll(const Globals& gl, int threads, int trials, std::ostream& out) {
  VerifyOptions opts;
  opts.seed = gl.seed;
  opts.threads = threads;
  opts.trials = trials;
  const auto outcomes = VerifyAll(Corpus(), opts);
  int passed = 0, skipped = 0, failed = 0;
  for (const auto& o : outcomes) {
    if (o.skipped) {
      ++skipped;
    } else if (o.passed) {
      ++passed;
    } else {
      ++failed;
    }
  }
  if (gl.json) {
    Json j = Json::array();
    for (const auto& o : outcomes) {
      j.push_back({{"entry", o.entry},
                   {"check", o.check},
                   {"result", o.skipped ? "skipped" : (o.passed ? "pass" : "fail")},
                   {"detail", o.detail}});
    }
    out << Json({{"seed", gl.seed}, {"outcomes", std::move(j)}, {"passed", passed}, {"skipped", skipped},
                 {"failed", failed}})
               .dump(2)
        << "\n";
  } else {
    Table t({"entry", "check", "result", "detail"});
    for (const auto& o : outcomes) {
      t.Add({o.entry, o.check, o.skipped ? "skip" : (o.passed ? "pass" : "FAIL"), o.detail});
    }
    t.Print(out);
    out << "\nseed " << gl.seed << ": " << passed << " passed, " << skipped << " skipped, " << failed
        << " failed\n";
  }
  return failed == 0 ? kExitOk : kExitViolation;
}

int ExitCodeFor(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kStrippingFailure:
    case ErrorCode::kRelationViolation:
      return kExitViolation;
    default:
      return kExitInputError;
  }
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Split quivers, folded Lie algebras and theta-twisted framed modules"};
  app.name("qfold");
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  app.add_flag("--json", gl.json, "machine-readable output");
  app.add_option("--seed", gl.seed, "master seed for randomized work")->capture_default_str();

  Source src;
  std::function<int()> action;

  auto* split = app.add_subcommand("split", "split quiver s(Q) with its labels");
  AddSource(split, src);
  split->callback([&] { action = [&] { return RunSplit(gl, src, in, out); }; });

  auto* quotient = app.add_subcommand("quotient", "quotient quiver Q/a");
  AddSource(quotient, src);
  quotient->callback([&] { action = [&] { return RunQuotient(gl, src, in, out); }; });

  auto* fold = app.add_subcommand("fold", "base, split and folded Cartan types");
  AddSource(fold, src);
  fold->callback([&] { action = [&] { return RunFold(gl, src, in, out); }; });

  BranchArgs ba;
  auto* branch = app.add_subcommand("branch", "branch the highest-weight module of a framing");
  AddSource(branch, src);
  branch->add_option("--framing", ba.framing, "a-invariant framing, e.g. 0,1,0")->required();
  branch->add_option("--cap", ba.cap, "Weyl dimension cap")->capture_default_str();
  branch->callback([&] { action = [&] { return RunBranch(gl, src, ba, in, out); }; });

  DimsArgs da;
  auto* dims = app.add_subcommand("dims", "components of the theta-fixed locus and their dimensions");
  AddSource(dims, src);
  dims->add_option("--v", da.v, "orbit-constant dimension vector on Q")->required();
  auto* w_opt = dims->add_option("--w", da.w, "framing on Q, split with sigma = identity");
  dims->add_option("--w-split", da.w_split, "framing on s(Q)")->excludes(w_opt);
  dims->callback([&] { action = [&] { return RunDims(gl, src, da, in, out); }; });

  ModuleArgs ma;
  auto* module = app.add_subcommand("module", "framed module laboratory");
  module->require_subcommand(1);
  module->fallthrough();
  auto add_module_sub = [&](const char* name, const char* help,
                            int (*run)(const Globals&, const Source&, const ModuleArgs&, std::istream&,
                                       std::ostream&)) {
    auto* sub = module->add_subcommand(name, help);
    AddSource(sub, src);
    sub->add_option("--mode", ma.mode, "relation signs")
        ->check(CLI::IsMember({"signed", "unsigned"}))
        ->capture_default_str();
    sub->callback([&, run] { action = [&, run] { return run(gl, src, ma, in, out); }; });
    return sub;
  };
  auto* check = add_module_sub("check", "relations and stability", RunModuleCheck);
  check->add_option("--module", ma.module, "module JSON")->required();
  auto* theta = add_module_sub("theta", "apply theta", RunModuleTheta);
  theta->add_option("--module", ma.module, "module JSON")->required();
  theta->add_option("--sigma", ma.sigma, "sigma_i : W_i -> W_a(i) as JSON (default identity)");
  auto* transition = add_module_sub("transition", "solve theta(M) = g M", RunModuleTransition);
  transition->add_option("--module", ma.module, "module JSON")->required();
  transition->add_option("--sigma", ma.sigma, "sigma JSON (default identity)");
  auto* witness = add_module_sub("witness", "transition witness for M1 + g theta(M1)", RunModuleWitness);
  witness->add_option("--module", ma.module, "M1 as module JSON, I = J = 0")->required();
  witness->add_option("--g", ma.g, "g in G_V as JSON (default 2 at every vertex)");
  witness->add_option("--sigma", ma.sigma, "sigma JSON (default identity)");
  auto* t5 = add_module_sub("theorem5", "eigenspace compatibility of a stable pair", RunModuleTheorem5);
  auto* inst = t5->add_option("--instance", ma.instance, "JSON with sub, module, xi, g_sub, g, sigma");
  t5->add_option("--v", ma.v, "generate: dimension vector of M")->excludes(inst);
  t5->add_option("--v-sub", ma.v_sub, "generate: dimension vector of the submodule")->excludes(inst);
  t5->add_option("--w", ma.w, "generate: framing (default v + 1)")->excludes(inst);
  t5->add_option("--count", ma.count, "generate: number of pairs")->check(CLI::PositiveNumber)->capture_default_str();

  int threads = 0, trials = 20;
  auto* verify = app.add_subcommand("verify-all", "run the property suite over the corpus");
  verify->add_option("--threads", threads, "worker threads (0: all cores)")->capture_default_str();
  verify->add_option("--trials", trials, "random samples per check")->check(CLI::PositiveNumber)->capture_default_str();
  verify->callback([&] { action = [&] { return RunVerifyAll(gl, threads, trials, out); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }
  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return ExitCodeFor(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace qfold
