#pragma once

#include <set>
#include <vector>

#include "critfix/planar_map.hpp"

namespace critfix {

// A realization together with the vertex assigned to each requested row.
// Vertices are named by an anchor dart that surgery never moves.
struct Realization {
  PlanarMap graph;
  std::vector<int> row_anchor;  // row i -> a dart at its vertex
  std::vector<int> rows;        // requested valences, in caller order
  int vertex_of_row(int i) const { return graph.vertex_of(row_anchor[i]); }
};

PlanarMap realize_connected(const Partition& p, int d);
Realization realize_connected_rows(const std::vector<int>& rows, int d);

PlanarMap realize_general(const Partition& p, int d);
Realization realize_general_rows(const std::vector<int>& rows, int d);

// Buffer-vertex shift: valence of v1 drops by one, valence of v2 rises by one.
// Vertex arguments are vertex ids of g. Buffer vertices in `exclude` are skipped.
PlanarMap shift_valence(const PlanarMap& g, int v1, int v2, const std::set<int>& exclude = {});
// Raise the valences of s and t by one each along a minimal s-t path.
PlanarMap increment_pair(const PlanarMap& g, int s, int t);
// Raise the valence of v1 by two: an edge v2v3 becomes v1v3 and a new edge v2v1 is added.
PlanarMap increment_twice(const PlanarMap& g, int v1);

bool simple_adjacent(const PlanarMap& g, int u, int v);
int simple_degree(const PlanarMap& g, int v);
std::vector<int> shortest_path(const PlanarMap& g, int s, int t);

}  // namespace critfix
