#pragma once

#include <string>
#include <vector>

#include "critfix/algebra.hpp"

namespace critfix {

struct PartitionFlags {
  bool polynomial_type = false;
  bool newton_candidate = false;
  bool belyi_candidate = false;
};

// partitions of 2d-2 with at most d parts, each part at most d-1, in young order
std::vector<Partition> admissible_partitions(int d);
std::vector<Partition> nonpolynomial_partitions(int d);
bool is_admissible(const Partition& p, int d);

// descending by the integer obtained from reading the parts as base-(2d-1) digits
std::vector<Partition> young_sort(std::vector<Partition> ps, int d);
unsigned long long young_key(const Partition& p, int d);
PartitionFlags classify(const Partition& p, int d);

Partition normalize_partition(Partition p);
// "3+3+2+1+1", "33211", "[3,3,2,1,1]" or "3,3,2,1,1"
Partition parse_partition(const std::string& text);
std::string partition_plus(const Partition& p);
std::string partition_compact(const Partition& p);
std::string partition_list(const Partition& p);

}  // namespace critfix
