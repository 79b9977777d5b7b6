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

#include "qfold/split_quotient.h"

#include <algorithm>
#include <numeric>

#include "qfold/eigen.h"
#include "qfold/error.h"

namespace qfold {

DimensionVector::DimensionVector(std::vector<int> values) : values_(std::move(values)) {
  for (int x : values_) {
    if (x < 0) throw Error(ErrorCode::kShapeMismatch, "dimension vectors are nonnegative");
  }
}

DimensionVector DimensionVector::FromMap(const Quiver& q,
                                         const std::vector<std::pair<std::string, int>>& m) {
  DimensionVector out = Zero(q.num_vertices());
  for (const auto& [id, value] : m) {
    if (value < 0) throw Error(ErrorCode::kShapeMismatch, "negative dimension at '" + id + "'");
    out[q.VertexIndex(id)] = value;
  }
  return out;
}

int DimensionVector::Total() const { return std::accumulate(values_.begin(), values_.end(), 0); }

namespace {

std::string JoinIds(const std::vector<int>& members,
                    const std::function<const std::string&(int)>& name) {
  std::string out = "[";
  for (size_t k = 0; k < members.size(); ++k) {
    if (k) out += ",";
    out += name(members[k]);
  }
  return out + "]";
}

void RequireAdmissible(const Quiver& q, const DiagramAutomorphism& a) {
  if (!IsAdmissible(q, a)) {
    throw Error(ErrorCode::kNotAdmissible, "an edge joins two vertices of one orbit");
  }
}

void RequireOrbitConstant(const DimensionVector& v, const OrbitData& od) {
  for (const auto& orbit : od.vertex_orbits) {
    for (int x : orbit) {
      if (x >= v.size()) throw Error(ErrorCode::kUnknownVertex, "dimension vector too short");
      if (v[x] != v[orbit.front()]) {
        throw Error(ErrorCode::kNotOrbitConstant, "dimension vector differs along an orbit");
      }
    }
  }
}

}  // namespace

Quiver QuotientQuiver(const Quiver& q, const DiagramAutomorphism& a) {
  RequireAdmissible(q, a);
  const OrbitData od = ComputeOrbitData(q, a);
  auto vname = [&](int v) -> const std::string& { return q.vertex_id(v); };
  auto ename = [&](int e) -> const std::string& { return q.edge(e).id; };
  std::vector<std::string> vertices;
  for (const auto& orbit : od.vertex_orbits) vertices.push_back(JoinIds(orbit, vname));
  std::vector<EdgeSpec> edges;
  for (const auto& orbit : od.edge_orbits) {
    const Edge& rep = q.edge(orbit.front());
    edges.push_back({JoinIds(orbit, ename), vertices[od.vertex_orbit_of[rep.src]],
                     vertices[od.vertex_orbit_of[rep.tgt]]});
  }
  return Quiver(std::move(vertices), edges);
}

SplitData SplitQuiver(const Quiver& q, const DiagramAutomorphism& a, std::optional<int> n_override) {
  RequireAdmissible(q, a);
  SplitData sd;
  sd.source = q;
  sd.source_automorphism = a;
  sd.orbits = ComputeOrbitData(q, a, n_override);
  const OrbitData& od = sd.orbits;

  std::vector<std::string> vertices;
  sd.split_vertices_of_orbit.resize(od.num_vertex_orbits());
  for (int k = 0; k < od.num_vertex_orbits(); ++k) {
    const int lift = od.vertex_orbits[k].front();
    const int e = od.vertex_e[lift];
    for (int j = 1; j <= e; ++j) {
      sd.split_vertices_of_orbit[k].push_back(static_cast<int>(vertices.size()));
      sd.labels.push_back({k, j, e});
      vertices.push_back(q.vertex_id(lift) + ":" + std::to_string(j) + "/" + std::to_string(e));
    }
  }

  std::vector<EdgeSpec> edges;
  for (int k = 0; k < od.num_edge_orbits(); ++k) {
    const int rep = od.edge_orbits[k].front();
    const int s = od.vertex_orbit_of[q.edge(rep).src];
    const int t = od.vertex_orbit_of[q.edge(rep).tgt];
    const int es = od.vertex_e[q.edge(rep).src];
    const int et = od.vertex_e[q.edge(rep).tgt];
    const int eh = od.edge_e[rep];
    for (int j1 = 1; j1 <= es; ++j1) {
      for (int j2 = 1; j2 <= et; ++j2) {
        if ((j1 - j2) % eh != 0) continue;
        sd.edge_labels.push_back({k, j1, j2});
        edges.push_back({q.edge(rep).id + ":" + std::to_string(j1) + "," + std::to_string(j2),
                         vertices[sd.SplitVertexIndex(s, j1)],
                         vertices[sd.SplitVertexIndex(t, j2)]});
      }
    }
  }
  sd.split = Quiver(std::move(vertices), edges);

  std::vector<int> vperm(sd.labels.size());
  for (size_t x = 0; x < sd.labels.size(); ++x) {
    const SplitVertex& l = sd.labels[x];
    vperm[x] = sd.SplitVertexIndex(l.orbit, l.j % l.e + 1);
  }
  std::vector<int> eperm(sd.edge_labels.size());
  for (size_t x = 0; x < sd.edge_labels.size(); ++x) {
    const SplitEdge& l = sd.edge_labels[x];
    const Edge& split_edge = sd.split.edge(static_cast<int>(x));
    const int es = sd.labels[split_edge.src].e;
    const int et = sd.labels[split_edge.tgt].e;
    const SplitEdge target{l.edge_orbit, l.j_src % es + 1, l.j_tgt % et + 1};
    for (size_t y = 0; y < sd.edge_labels.size(); ++y) {
      const SplitEdge& c = sd.edge_labels[y];
      if (c.edge_orbit == target.edge_orbit && c.j_src == target.j_src &&
          c.j_tgt == target.j_tgt) {
        eperm[x] = static_cast<int>(y);
      }
    }
  }
  sd.induced = DiagramAutomorphism(std::move(vperm), std::move(eperm));
  return sd;
}

std::optional<Bijection> GraphIsomorphic(const Quiver& q1, const Quiver& q2,
                                         const std::function<bool(const Bijection&)>& accept) {
  const int n = q1.num_vertices();
  if (n != q2.num_vertices() || q1.num_edges() != q2.num_edges()) return std::nullopt;
  auto adjacency = [n](const Quiver& q) {
    std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
    for (const Edge& e : q.edges()) {
      adj[e.src][e.tgt] += 1;
      if (e.src != e.tgt) adj[e.tgt][e.src] += 1;
    }
    return adj;
  };
  const auto adj1 = adjacency(q1);
  const auto adj2 = adjacency(q2);
  auto signature = [n](const std::vector<std::vector<int>>& adj, int v) {
    std::vector<int> row = adj[v];
    std::sort(row.begin(), row.end());
    row.push_back(adj[v][v]);
    return row;
  };
  std::vector<std::vector<int>> sig1(n), sig2(n);
  for (int v = 0; v < n; ++v) {
    sig1[v] = signature(adj1, v);
    sig2[v] = signature(adj2, v);
  }
  {
    auto s1 = sig1, s2 = sig2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }

  Bijection map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> extend = [&](int v) -> bool {
    if (v == n) return !accept || accept(map);
    for (int w = 0; w < n; ++w) {
      if (used[w] || sig1[v] != sig2[w]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = adj1[v][u] == adj2[w][map[u]];
      if (!ok) continue;
      map[v] = w;
      used[w] = true;
      if (extend(v + 1)) return true;
      used[w] = false;
    }
    map[v] = -1;
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return map;
}

InvolutionWitness SplitInvolutionCheck(const Quiver& q, const DiagramAutomorphism& a) {
  const SplitData once = SplitQuiver(q, a);
  const SplitData twice = SplitQuiver(once.split, once.induced, once.orbits.n);
  InvolutionWitness witness;
  witness.double_split = twice.split;
  auto intertwines = [&](const Bijection& f) {
    for (int x = 0; x < twice.split.num_vertices(); ++x) {
      if (f[twice.induced.vertex(x)] != a.vertex(f[x])) return false;
    }
    return true;
  };
  if (auto f = GraphIsomorphic(twice.split, q, intertwines)) {
    witness.to_source = *f;
    witness.automorphisms_match = true;
    return witness;
  }
  if (auto f = GraphIsomorphic(twice.split, q)) {
    witness.to_source = *f;
    return witness;
  }
  throw Error(ErrorCode::kIsoNotFound, "s(s(Q)) is not isomorphic to Q");
}

DimensionVector ProjectDim(const DimensionVector& v_split, const SplitData& sd) {
  if (v_split.size() != sd.split.num_vertices()) {
    throw Error(ErrorCode::kUnknownVertex, "vector is not indexed by the split vertices");
  }
  DimensionVector out = DimensionVector::Zero(sd.source.num_vertices());
  for (int k = 0; k < sd.orbits.num_vertex_orbits(); ++k) {
    int sum = 0;
    for (int x : sd.split_vertices_of_orbit[k]) sum += v_split[x];
    for (int v : sd.orbits.vertex_orbits[k]) out[v] = sum;
  }
  return out;
}

std::vector<DimensionVector> FibersOfP(const DimensionVector& v, const SplitData& sd) {
  RequireOrbitConstant(v, sd.orbits);
  // Per orbit: weak compositions of v_lift into e parts, lexicographic.
  std::vector<std::vector<std::vector<int>>> per_orbit;
  for (int k = 0; k < sd.orbits.num_vertex_orbits(); ++k) {
    const int total = v[sd.Lift(k)];
    const int parts = static_cast<int>(sd.split_vertices_of_orbit[k].size());
    std::vector<std::vector<int>> comps;
    std::vector<int> cur(parts, 0);
    std::function<void(int, int)> rec = [&](int idx, int left) {
      if (idx == parts - 1) {
        cur[idx] = left;
        comps.push_back(cur);
        return;
      }
      for (int x = 0; x <= left; ++x) {
        cur[idx] = x;
        rec(idx + 1, left - x);
      }
    };
    rec(0, total);
    per_orbit.push_back(std::move(comps));
  }
  std::vector<DimensionVector> out;
  std::vector<size_t> choice(per_orbit.size(), 0);
  while (true) {
    DimensionVector vs = DimensionVector::Zero(sd.split.num_vertices());
    for (size_t k = 0; k < per_orbit.size(); ++k) {
      const auto& comp = per_orbit[k][choice[k]];
      for (size_t j = 0; j < comp.size(); ++j) vs[sd.split_vertices_of_orbit[k][j]] = comp[j];
    }
    out.push_back(std::move(vs));
    int k = static_cast<int>(per_orbit.size()) - 1;
    while (k >= 0 && ++choice[k] == per_orbit[k].size()) choice[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

long long FiberCount(const DimensionVector& v, const SplitData& sd) {
  RequireOrbitConstant(v, sd.orbits);
  long long count = 1;
  for (int k = 0; k < sd.orbits.num_vertex_orbits(); ++k) {
    const int total = v[sd.Lift(k)];
    const int e = static_cast<int>(sd.split_vertices_of_orbit[k].size());
    // C(total + e - 1, e - 1)
    long long c = 1;
    for (int i = 1; i <= e - 1; ++i) c = c * (total + i) / i;
    count *= c;
  }
  return count;
}

RationalMatrix OrbitComposite(const std::vector<RationalMatrix>& sigma,
                              const DiagramAutomorphism& a, const OrbitData& od, int vertex) {
  RationalMatrix m = sigma[vertex];
  int x = a.vertex(vertex);
  for (int k = 1; k < od.vertex_orbit_size[vertex]; ++k) {
    m = sigma[x] * m;
    x = a.vertex(x);
  }
  return m;
}

DimensionVector SplitFraming(const DimensionVector& w, const std::vector<RationalMatrix>& sigma,
                             const SplitData& sd, const std::vector<int>& lifts) {
  const Quiver& q = sd.source;
  const DiagramAutomorphism& a = sd.source_automorphism;
  const OrbitData& od = sd.orbits;
  RequireOrbitConstant(w, od);
  if (static_cast<int>(sigma.size()) != q.num_vertices()) {
    throw Error(ErrorCode::kShapeMismatch, "need one sigma per vertex");
  }
  for (int i = 0; i < q.num_vertices(); ++i) {
    if (sigma[i].rows() != w[a.vertex(i)] || sigma[i].cols() != w[i]) {
      throw Error(ErrorCode::kShapeMismatch, "sigma at '" + q.vertex_id(i) + "' has shape " +
                                                 sigma[i].ShapeString());
    }
  }
  for (int i = 0; i < q.num_vertices(); ++i) {
    const RationalMatrix comp = OrbitComposite(sigma, a, od, i);
    if (comp.Power(od.vertex_e[i]) != RationalMatrix::Identity(w[i])) {
      throw Error(ErrorCode::kSigmaConstraintViolated,
                  "orbit composite at '" + q.vertex_id(i) + "' is not of order dividing e_i");
    }
  }
  DimensionVector out = DimensionVector::Zero(sd.split.num_vertices());
  for (int k = 0; k < od.num_vertex_orbits(); ++k) {
    const int lift = lifts.empty() ? sd.Lift(k) : lifts[k];
    if (od.vertex_orbit_of[lift] != k) {
      throw Error(ErrorCode::kIndexMismatch, "lift does not belong to its orbit");
    }
    const auto pieces = EigenGrade(OrbitComposite(sigma, a, od, lift), od.vertex_e[lift]);
    for (const EigenPiece& piece : pieces) out[sd.SplitVertexIndex(k, piece.j)] = piece.dimension;
  }
  return out;
}

}  // namespace qfold
