#pragma once

#include "critfix/planar_map.hpp"

namespace fixtures {

// the worked-example graph: v0 leaf on v1; v1-v2 doubled; v1-v3; v2-v3
inline critfix::PlanarMap worked_example() {
  return critfix::PlanarMap({1, 0, 9, 6, 5, 4, 3, 8, 7, 2}, {0, 2, 3, 4, 1, 6, 7, 5, 9, 8});
}

inline critfix::PlanarMap triangle() { return critfix::cycle_graph(3); }

}  // namespace fixtures
