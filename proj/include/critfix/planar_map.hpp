#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "critfix/algebra.hpp"

namespace critfix {

// Oriented combinatorial map on darts 0..N-1.
//   opp : edge involution
//   nxt : counterclockwise successor around the origin vertex
// Faces are the orbits of phi(x) = nxt(opp(x)); a face lies to the right of each of its darts.
// A corner is named by a dart x: the angular sector at origin(x) between prv(x) and x.
// It belongs to the face of x.
class PlanarMap {
 public:
  PlanarMap() = default;
  PlanarMap(std::vector<int> opp, std::vector<int> nxt);

  int darts() const { return static_cast<int>(opp_.size()); }
  int edge_count() const { return darts() / 2; }
  int opp(int x) const { return opp_[x]; }
  int nxt(int x) const { return nxt_[x]; }
  int prv(int x) const { return prv_[x]; }
  int phi(int x) const { return nxt_[opp_[x]]; }
  const std::vector<int>& opp_table() const { return opp_; }
  const std::vector<int>& nxt_table() const { return nxt_; }

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int vertex_of(int x) const { return vert_of_[x]; }
  // darts leaving v in counterclockwise order, starting at the least dart
  const std::vector<int>& vertex_darts(int v) const { return vertices_[v]; }
  int valence(int v) const { return static_cast<int>(vertices_[v].size()); }

  int face_count() const { return static_cast<int>(faces_.size()); }
  int face_of(int x) const { return face_of_[x]; }
  // face cycle in phi order, starting at its least dart
  const std::vector<int>& face_darts(int f) const { return faces_[f]; }
  const std::vector<std::vector<int>>& faces() const { return faces_; }

  int component_count() const { return comp_count_; }
  int component_of_vertex(int v) const { return comp_of_vertex_[v]; }
  bool connected() const { return comp_count_ <= 1; }

  // edge id = index in the list of least darts of each edge
  int edge_of(int x) const { return edge_of_[x]; }
  int edge_dart(int e) const { return edge_rep_[e]; }

  std::vector<std::string> vertex_names;  // optional; indexed by vertex id

  friend bool operator==(const PlanarMap& a, const PlanarMap& b) {
    return a.opp_ == b.opp_ && a.nxt_ == b.nxt_;
  }

 private:
  void build();
  std::vector<int> opp_, nxt_, prv_;
  std::vector<std::vector<int>> vertices_, faces_;
  std::vector<int> vert_of_, face_of_, edge_of_, edge_rep_, comp_of_vertex_;
  int comp_count_ = 0;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> problems;
};

struct WeightedEdge {
  int u, v, weight;
  friend bool operator==(const WeightedEdge& a, const WeightedEdge& b) {
    return a.u == b.u && a.v == b.v && a.weight == b.weight;
  }
};

struct WeightedSimpleGraph {
  int vertex_count = 0;
  std::vector<WeightedEdge> edges;  // u < v, sorted
  int weight(int u, int v) const;
};

ValidationReport validate(const std::vector<int>& opp, const std::vector<int>& nxt);
ValidationReport validate(const PlanarMap& g);

Partition valence_partition(const PlanarMap& g);
std::vector<int> canonical_form(const PlanarMap& g);
bool isomorphic(const PlanarMap& a, const PlanarMap& b);
PlanarMap relabel_darts(const PlanarMap& g, const std::vector<int>& perm);  // dart x becomes perm[x]
PlanarMap mirror(const PlanarMap& g);
PlanarMap disjoint_union(const PlanarMap& a, const PlanarMap& b);

// surgery; each returns a new validated map
PlanarMap insert_edge_in_face(const PlanarMap& g, int corner1, int corner2);
PlanarMap subdivide_edge(const PlanarMap& g, int dart);
PlanarMap add_leaf(const PlanarMap& g, int corner);
PlanarMap delete_edge(const PlanarMap& g, int dart);
// move the origin of dart x to the corner c at another vertex
PlanarMap move_dart(const PlanarMap& g, int x, int corner);

WeightedSimpleGraph to_simple(const PlanarMap& g);
bool abstract_isomorphic(const WeightedSimpleGraph& a, const WeightedSimpleGraph& b);
std::vector<int> abstract_canonical_form(const WeightedSimpleGraph& g);

// small constructors used across modules and tests
PlanarMap single_edge();
PlanarMap parallel_edges(int k);
PlanarMap cycle_graph(int k);
PlanarMap path_graph(int edges);
// build from per-vertex ccw neighbor lists; parallel edges repeat the neighbor,
// and the i-th occurrence of w around v pairs with the matching occurrence of v around w
// counted in reverse (so consecutive parallel edges nest consistently)
PlanarMap from_rotation(const std::vector<std::vector<int>>& nbrs);

std::string to_dot(const PlanarMap& g);

}  // namespace critfix
