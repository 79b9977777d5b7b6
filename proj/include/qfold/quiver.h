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

// Quivers, their doubled and framed versions, and diagram automorphisms.
//
// Vertices and edges are addressed by index everywhere inside the library;
// the string ids are kept for I/O. Vertex order is the order in which the
// vertices were supplied and is canonical for every downstream computation.
#ifndef QFOLD_QUIVER_H_
#define QFOLD_QUIVER_H_

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace qfold {

struct EdgeSpec {
  std::string id;
  std::string src;
  std::string tgt;
};

struct Edge {
  std::string id;
  int src = 0;
  int tgt = 0;
};

class Quiver {
 public:
  Quiver() = default;
  // Throws Error(kInvalidQuiver) on duplicate ids or dangling endpoints.
  Quiver(std::vector<std::string> vertices, const std::vector<EdgeSpec>& edges);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& vertex_id(int v) const { return vertices_[v]; }
  const Edge& edge(int e) const { return edges_[e]; }

  // Throws Error(kUnknownVertex).
  int VertexIndex(const std::string& id) const;
  std::optional<int> FindVertex(const std::string& id) const;
  std::optional<int> FindEdge(const std::string& id) const;

  bool HasSelfLoop() const;
  // Number of edges joining u and v in either direction.
  int Multiplicity(int u, int v) const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.vertices_ == b.vertices_ && a.EdgeTriples() == b.EdgeTriples();
  }

 private:
  std::vector<std::tuple<std::string, int, int>> EdgeTriples() const;

  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::map<std::string, int> vertex_index_;
  std::map<std::string, int> edge_index_;
};

// Arrow 2e is edge e itself (sign +1); arrow 2e+1 is its reverse e* (sign -1).
struct Arrow {
  int edge = 0;
  int sign = 1;
  int src = 0;
  int tgt = 0;
};

struct DoubledQuiver {
  Quiver base;
  std::vector<Arrow> arrows;

  static int Reverse(int arrow) { return arrow ^ 1; }
  int num_arrows() const { return static_cast<int>(arrows.size()); }
};

DoubledQuiver BuildDoubled(const Quiver& q);

// Framed vertex (i, 0) has index i, framing vertex (i, 1) has index n + i.
struct FramingPair {
  int vertex = 0;
  int to_framing = 0;    // (i,0) -> (i,1), carries J
  int from_framing = 0;  // (i,1) -> (i,0), carries I
};

struct FramedQuiver {
  DoubledQuiver base;
  int num_vertices = 0;
  std::vector<Arrow> arrows;  // doubled arrows first, then framing arrows
  std::vector<FramingPair> framing;
};

FramedQuiver BuildFramed(const Quiver& q);

class DiagramAutomorphism {
 public:
  DiagramAutomorphism() = default;
  DiagramAutomorphism(std::vector<int> vertex_perm, std::vector<int> edge_perm);

  static DiagramAutomorphism Identity(const Quiver& q);
  // Derives the edge permutation; throws Error(kAmbiguousEdgeMap) when
  // parallel edges make the choice non-unique.
  static DiagramAutomorphism FromVertexMap(const Quiver& q, std::vector<int> vertex_perm);

  const std::vector<int>& vertex_perm() const { return vertex_perm_; }
  const std::vector<int>& edge_perm() const { return edge_perm_; }
  int vertex(int v) const { return vertex_perm_[v]; }
  int edge(int e) const { return edge_perm_[e]; }
  // Smallest k >= 1 with a^k = id on vertices and edges.
  int order() const { return order_; }

  DiagramAutomorphism Compose(const DiagramAutomorphism& then) const;
  DiagramAutomorphism Power(int k) const;
  DiagramAutomorphism Inverse() const;

  friend bool operator==(const DiagramAutomorphism& a, const DiagramAutomorphism& b) {
    return a.vertex_perm_ == b.vertex_perm_ && a.edge_perm_ == b.edge_perm_;
  }

 private:
  std::vector<int> vertex_perm_;
  std::vector<int> edge_perm_;
  int order_ = 1;
};

// Succeeds iff both maps are bijections and every edge e is sent to an edge
// joining a(src e) and a(tgt e). Orientation is not compared: diagrams are
// undirected once doubled. Throws kNotAPermutation or
// kIncompatibleWithIncidence (naming the edge).
void CheckAutomorphism(const Quiver& q, const DiagramAutomorphism& a);

// Image of a doubled arrow under a.
int MapArrow(const DoubledQuiver& dq, const DiagramAutomorphism& a, int arrow);

bool IsAdmissible(const Quiver& q, const DiagramAutomorphism& a);

struct OrbitData {
  std::vector<std::vector<int>> vertex_orbits;  // sorted, ordered by minimum
  std::vector<std::vector<int>> edge_orbits;
  std::vector<int> vertex_orbit_of;
  std::vector<int> edge_orbit_of;
  std::vector<int> vertex_orbit_size;  // d_i per vertex
  std::vector<int> edge_orbit_size;    // d_h per edge
  int n = 1;                           // lcm of all orbit sizes
  std::vector<int> vertex_e;           // e_i = n / d_i
  std::vector<int> edge_e;             // e_h = n / d_h

  int num_vertex_orbits() const { return static_cast<int>(vertex_orbits.size()); }
  int num_edge_orbits() const { return static_cast<int>(edge_orbits.size()); }
};

// `n_override`, when given, replaces the lcm (it must be a multiple of it).
OrbitData ComputeOrbitData(const Quiver& q, const DiagramAutomorphism& a,
                           std::optional<int> n_override = std::nullopt);

// Named families. Vertex ids are decimal strings.
//   A(n):          1 - 2 - ... - n, edges k -> k+1.
//   D(n):          path 1 .. n-2, fork n-2 -> n-1 and n-2 -> n (n >= 3).
//   AffineA(n):    cycle 0 -> 1 -> ... -> n -> 0 (n >= 2); AffineA(1) is
//                  two vertices joined by two parallel edges 0 -> 1.
//   AffineD(n):    0 and 1 fork into 2, path 2 .. n-2, fork n-2 -> n-1, n
//                  (n >= 4, n + 1 vertices).
namespace families {
Quiver A(int n);
Quiver D(int n);
Quiver AffineA(int n);
Quiver AffineD(int n);

// i -> n + 1 - i on A(n).
DiagramAutomorphism AFlip(const Quiver& a_n);
// Swaps the two vertices of the final fork of D(n).
DiagramAutomorphism DForkSwap(const Quiver& d_n);
}  // namespace families

}  // namespace qfold

#endif  // QFOLD_QUIVER_H_
