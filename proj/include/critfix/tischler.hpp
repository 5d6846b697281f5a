#pragma once

#include <vector>

#include "critfix/hurwitz.hpp"
#include "critfix/planar_map.hpp"

namespace critfix {

enum class Color { C, R };

// bipartite planar map; C vertices are critical points, R vertices are faces of the multigraph
struct TischlerGraph {
  PlanarMap map;
  std::vector<Color> color;  // per vertex of map
  int c_count() const;
  int r_count() const;
};

// one T-edge per corner of G; T dart 2x sits at the vertex of corner x, 2x+1 at its face
TischlerGraph tischler_from_graph(const PlanarMap& g);
PlanarMap graph_from_tischler(const TischlerGraph& t);

// bipartite, |E| = 2d-2, |C|+|R| <= d+1, 2 <= |C| <= d, and every bigon has C-vertices on both sides
Report tischler_invariants(const TischlerGraph& t, int d);

PlanarMap star_graph(int d);
bool is_star(const PlanarMap& g);

}  // namespace critfix
