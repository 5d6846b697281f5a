#pragma once

#include <vector>

#include "critfix/partitions.hpp"
#include "critfix/planar_map.hpp"

namespace critfix {

// Connected loop-free planar maps with valence multiset p, one per oriented isomorphism class,
// each relabeled to its canonical numbering and sorted by canonical form.
std::vector<PlanarMap> enumerate_planar_classes(const Partition& p, int d);

// number of classes of the planar classes under abstract multigraph isomorphism
int enumerate_abstract_classes(const Partition& p, int d);
// the planar classes grouped by abstract class (indices into `planar`)
std::vector<std::vector<int>> group_abstract(const std::vector<PlanarMap>& planar);

// canonical relabeling of a connected map (dart 0 is the canonical start)
PlanarMap canonical_representative(const PlanarMap& g);

struct CensusRow {
  Partition partition;
  PartitionFlags flags;
  int planar = 0;
  int abstract = 0;
  std::vector<PlanarMap> representatives;
};

struct Census {
  int d = 0;
  std::vector<CensusRow> rows;
  int total_planar() const;
};

// non-polynomial partitions only unless include_polynomial is set; 2 <= d <= 8
Census census(int d, bool include_polynomial = false);

}  // namespace critfix
