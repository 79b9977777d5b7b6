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

#include "qfold/quiver.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "qfold/error.h"

namespace qfold {

Quiver::Quiver(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges)
    : vertices_(std::move(vertices)) {
  for (int i = 0; i < num_vertices(); ++i) {
    if (!vertex_index_.emplace(vertices_[i], i).second) {
      throw Error(ErrorCode::kInvalidQuiver, "duplicate vertex id '" + vertices_[i] + "'");
    }
  }
  for (const EdgeSpec& es : edges) {
    auto s = FindVertex(es.src);
    auto t = FindVertex(es.tgt);
    if (!s || !t) {
      throw Error(ErrorCode::kInvalidQuiver,
                  "edge '" + es.id + "' has an endpoint outside the vertex set");
    }
    if (!edge_index_.emplace(es.id, num_edges()).second) {
      throw Error(ErrorCode::kInvalidQuiver, "duplicate edge id '" + es.id + "'");
    }
    edges_.push_back({es.id, *s, *t});
  }
}

int Quiver::VertexIndex(const std::string& id) const {
  auto v = FindVertex(id);
  if (!v) throw Error(ErrorCode::kUnknownVertex, "unknown vertex '" + id + "'");
  return *v;
}

std::optional<int> Quiver::FindVertex(const std::string& id) const {
  auto it = vertex_index_.find(id);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Quiver::FindEdge(const std::string& id) const {
  auto it = edge_index_.find(id);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

bool Quiver::HasSelfLoop() const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.src == e.tgt; });
}

int Quiver::Multiplicity(int u, int v) const {
  int count = 0;
  for (const Edge& e : edges_) {
    if ((e.src == u && e.tgt == v) || (e.src == v && e.tgt == u)) ++count;
  }
  return count;
}

std::vector<std::tuple<std::string, int, int>> Quiver::EdgeTriples() const {
  std::vector<std::tuple<std::string, int, int>> out;
  for (const Edge& e : edges_) out.emplace_back(e.id, e.src, e.tgt);
  return out;
}

DoubledQuiver BuildDoubled(const Quiver& q) {
  DoubledQuiver dq{q, {}};
  dq.arrows.reserve(2 * q.num_edges());
  for (int e = 0; e < q.num_edges(); ++e) {
    dq.arrows.push_back({e, +1, q.edge(e).src, q.edge(e).tgt});
    dq.arrows.push_back({e, -1, q.edge(e).tgt, q.edge(e).src});
  }
  return dq;
}

FramedQuiver BuildFramed(const Quiver& q) {
  FramedQuiver fq;
  fq.base = BuildDoubled(q);
  const int n = q.num_vertices();
  fq.num_vertices = 2 * n;
  fq.arrows = fq.base.arrows;
  for (int i = 0; i < n; ++i) {
    FramingPair pair;
    pair.vertex = i;
    pair.to_framing = static_cast<int>(fq.arrows.size());
    fq.arrows.push_back({-1, +1, i, n + i});
    pair.from_framing = static_cast<int>(fq.arrows.size());
    fq.arrows.push_back({-1, -1, n + i, i});
    fq.framing.push_back(pair);
  }
  return fq;
}

namespace {

bool IsPermutation(const std::vector<int>& p) {
  std::vector<bool> seen(p.size(), false);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

int PermutationOrder(const std::vector<int>& p) {
  int order = 1;
  std::vector<bool> seen(p.size(), false);
  for (size_t start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (int x = static_cast<int>(start); !seen[x]; x = p[x]) {
      seen[x] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

std::vector<std::vector<int>> Cycles(const std::vector<int>& p) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(p.size(), false);
  for (size_t start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int x = static_cast<int>(start); !seen[x]; x = p[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    std::sort(cycle.begin(), cycle.end());
    out.push_back(std::move(cycle));
  }
  return out;  // ordered by minimum since starts ascend
}

}  // namespace

DiagramAutomorphism::DiagramAutomorphism(std::vector<int> vertex_perm, std::vector<int> edge_perm)
    : vertex_perm_(std::move(vertex_perm)), edge_perm_(std::move(edge_perm)) {
  if (!IsPermutation(vertex_perm_)) {
    throw Error(ErrorCode::kNotAPermutation, "vertex map is not a bijection");
  }
  if (!IsPermutation(edge_perm_)) {
    throw Error(ErrorCode::kNotAPermutation, "edge map is not a bijection");
  }
  order_ = std::lcm(PermutationOrder(vertex_perm_), PermutationOrder(edge_perm_));
}

DiagramAutomorphism DiagramAutomorphism::Identity(const Quiver& q) {
  std::vector<int> v(q.num_vertices()), e(q.num_edges());
  std::iota(v.begin(), v.end(), 0);
  std::iota(e.begin(), e.end(), 0);
  return DiagramAutomorphism(std::move(v), std::move(e));
}

DiagramAutomorphism DiagramAutomorphism::FromVertexMap(const Quiver& q,
                                                       std::vector<int> vertex_perm) {
  if (static_cast<int>(vertex_perm.size()) != q.num_vertices() || !IsPermutation(vertex_perm)) {
    throw Error(ErrorCode::kNotAPermutation, "vertex map is not a bijection");
  }
  std::vector<int> edge_perm(q.num_edges(), -1);
  for (int e = 0; e < q.num_edges(); ++e) {
    const int s = vertex_perm[q.edge(e).src];
    const int t = vertex_perm[q.edge(e).tgt];
    int found = -1;
    for (int f = 0; f < q.num_edges(); ++f) {
      const Edge& cand = q.edge(f);
      if ((cand.src == s && cand.tgt == t) || (cand.src == t && cand.tgt == s)) {
        if (found >= 0) {
          throw Error(ErrorCode::kAmbiguousEdgeMap,
                      "parallel edges make the image of '" + q.edge(e).id + "' ambiguous");
        }
        found = f;
      }
    }
    if (found < 0) {
      throw Error(ErrorCode::kIncompatibleWithIncidence,
                  "no edge joins the images of the endpoints of '" + q.edge(e).id + "'");
    }
    edge_perm[e] = found;
  }
  return DiagramAutomorphism(std::move(vertex_perm), std::move(edge_perm));
}

DiagramAutomorphism DiagramAutomorphism::Compose(const DiagramAutomorphism& then) const {
  std::vector<int> v(vertex_perm_.size()), e(edge_perm_.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = then.vertex_perm_[vertex_perm_[i]];
  for (size_t i = 0; i < e.size(); ++i) e[i] = then.edge_perm_[edge_perm_[i]];
  return DiagramAutomorphism(std::move(v), std::move(e));
}

DiagramAutomorphism DiagramAutomorphism::Power(int k) const {
  k = ((k % order_) + order_) % order_;
  std::vector<int> v(vertex_perm_.size()), e(edge_perm_.size());
  std::iota(v.begin(), v.end(), 0);
  std::iota(e.begin(), e.end(), 0);
  DiagramAutomorphism result(std::move(v), std::move(e));
  for (int i = 0; i < k; ++i) result = result.Compose(*this);
  return result;
}

DiagramAutomorphism DiagramAutomorphism::Inverse() const { return Power(order_ - 1); }

void CheckAutomorphism(const Quiver& q, const DiagramAutomorphism& a) {
  if (static_cast<int>(a.vertex_perm().size()) != q.num_vertices()) {
    throw Error(ErrorCode::kNotAPermutation, "vertex map has the wrong size");
  }
  if (static_cast<int>(a.edge_perm().size()) != q.num_edges()) {
    throw Error(ErrorCode::kNotAPermutation, "edge map has the wrong size");
  }
  for (int e = 0; e < q.num_edges(); ++e) {
    const Edge& src = q.edge(e);
    const Edge& img = q.edge(a.edge(e));
    const int s = a.vertex(src.src), t = a.vertex(src.tgt);
    const bool same = img.src == s && img.tgt == t;
    const bool flipped = img.src == t && img.tgt == s;
    if (!same && !flipped) {
      throw Error(ErrorCode::kIncompatibleWithIncidence,
                  "edge '" + src.id + "' is sent to '" + img.id +
                      "', which does not join the images of its endpoints");
    }
  }
}

int MapArrow(const DoubledQuiver& dq, const DiagramAutomorphism& a, int arrow) {
  const Arrow& h = dq.arrows[arrow];
  const int image_edge = a.edge(h.edge);
  const int forward = 2 * image_edge;
  if (dq.arrows[forward].src == a.vertex(h.src) && dq.arrows[forward].tgt == a.vertex(h.tgt)) {
    // Loops and orientation-preserving maps keep the sign.
    if (dq.arrows[forward].src != dq.arrows[forward].tgt || h.sign > 0) return forward;
    return forward + 1;
  }
  return forward + 1;
}

bool IsAdmissible(const Quiver& q, const DiagramAutomorphism& a) {
  CheckAutomorphism(q, a);
  const OrbitData od = ComputeOrbitData(q, a);
  for (const Edge& e : q.edges()) {
    if (od.vertex_orbit_of[e.src] == od.vertex_orbit_of[e.tgt]) return false;
  }
  return true;
}

OrbitData ComputeOrbitData(const Quiver& q, const DiagramAutomorphism& a,
                           std::optional<int> n_override) {
  CheckAutomorphism(q, a);
  OrbitData od;
  od.vertex_orbits = Cycles(a.vertex_perm());
  od.edge_orbits = Cycles(a.edge_perm());
  od.vertex_orbit_of.assign(q.num_vertices(), 0);
  od.edge_orbit_of.assign(q.num_edges(), 0);
  od.vertex_orbit_size.assign(q.num_vertices(), 0);
  od.edge_orbit_size.assign(q.num_edges(), 0);
  int n = 1;
  for (int k = 0; k < od.num_vertex_orbits(); ++k) {
    for (int v : od.vertex_orbits[k]) {
      od.vertex_orbit_of[v] = k;
      od.vertex_orbit_size[v] = static_cast<int>(od.vertex_orbits[k].size());
    }
    n = std::lcm(n, static_cast<int>(od.vertex_orbits[k].size()));
  }
  for (int k = 0; k < od.num_edge_orbits(); ++k) {
    for (int e : od.edge_orbits[k]) {
      od.edge_orbit_of[e] = k;
      od.edge_orbit_size[e] = static_cast<int>(od.edge_orbits[k].size());
    }
    n = std::lcm(n, static_cast<int>(od.edge_orbits[k].size()));
  }
  if (n_override) {
    if (*n_override % n != 0) {
      throw Error(ErrorCode::kPreconditionViolation, "group order must be a multiple of the lcm");
    }
    n = *n_override;
  }
  od.n = n;
  od.vertex_e.resize(q.num_vertices());
  od.edge_e.resize(q.num_edges());
  for (int v = 0; v < q.num_vertices(); ++v) od.vertex_e[v] = n / od.vertex_orbit_size[v];
  for (int e = 0; e < q.num_edges(); ++e) od.edge_e[e] = n / od.edge_orbit_size[e];
  return od;
}

namespace families {

namespace {
std::string Id(int k) { return std::to_string(k); }
}  // namespace

Quiver A(int n) {
  std::vector<std::string> v;
  std::vector<EdgeSpec> e;
  for (int k = 1; k <= n; ++k) v.push_back(Id(k));
  for (int k = 1; k < n; ++k) e.push_back({"e" + Id(k), Id(k), Id(k + 1)});
  return Quiver(v, e);
}

Quiver D(int n) {
  if (n < 3) throw Error(ErrorCode::kInvalidQuiver, "D(n) needs n >= 3");
  std::vector<std::string> v;
  std::vector<EdgeSpec> e;
  for (int k = 1; k <= n; ++k) v.push_back(Id(k));
  for (int k = 1; k < n - 2; ++k) e.push_back({"e" + Id(k), Id(k), Id(k + 1)});
  e.push_back({"e" + Id(n - 2), Id(n - 2), Id(n - 1)});
  e.push_back({"e" + Id(n - 1), Id(n - 2), Id(n)});
  return Quiver(v, e);
}

Quiver AffineA(int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidQuiver, "affine A(n) needs n >= 1");
  if (n == 1) return Quiver({"0", "1"}, {{"e0", "0", "1"}, {"e1", "0", "1"}});
  std::vector<std::string> v;
  std::vector<EdgeSpec> e;
  for (int k = 0; k <= n; ++k) v.push_back(Id(k));
  for (int k = 0; k <= n; ++k) e.push_back({"e" + Id(k), Id(k), Id((k + 1) % (n + 1))});
  return Quiver(v, e);
}

Quiver AffineD(int n) {
  if (n < 4) throw Error(ErrorCode::kInvalidQuiver, "affine D(n) needs n >= 4");
  std::vector<std::string> v;
  std::vector<EdgeSpec> e;
  for (int k = 0; k <= n; ++k) v.push_back(Id(k));
  e.push_back({"e0", "0", "2"});
  e.push_back({"e1", "1", "2"});
  for (int k = 2; k < n - 2; ++k) e.push_back({"e" + Id(k), Id(k), Id(k + 1)});
  e.push_back({"e" + Id(n - 2), Id(n - 2), Id(n - 1)});
  e.push_back({"e" + Id(n - 1), Id(n - 2), Id(n)});
  return Quiver(v, e);
}

DiagramAutomorphism AFlip(const Quiver& a_n) {
  const int n = a_n.num_vertices();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = n - 1 - i;
  return DiagramAutomorphism::FromVertexMap(a_n, std::move(perm));
}

DiagramAutomorphism DForkSwap(const Quiver& d_n) {
  const int n = d_n.num_vertices();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[n - 2], perm[n - 1]);
  return DiagramAutomorphism::FromVertexMap(d_n, std::move(perm));
}

}  // namespace families

}  // namespace qfold
