#pragma once

#include <string>
#include <vector>

#include "critfix/algebra.hpp"

namespace critfix {

struct BranchData {
  int d = 0;
  std::vector<Partition> partitions;  // one per branch value, each normalized
  std::string to_string() const;
};

struct Report {
  bool ok = true;
  std::vector<std::string> problems;
};

using Tuple = std::vector<Perm>;

// "d=7; [7],[2,2,1,1,1],[2,2,1,1,1]"
BranchData parse_branch_data(const std::string& text);
// "(1234567),(12)(34),(13)(45)" ; degree d
Tuple parse_tuple(const std::string& text, int d);
std::string tuple_to_string(const Tuple& t);

Report validate_branch_data(const BranchData& bd);
Report validate_factorization(const Tuple& t, const BranchData& bd);

// all permutations of degree d with the given cycle type, in lexicographic order of images
const std::vector<Perm>& conjugacy_class(const Partition& type, int d);
// the representative with cycles on consecutive points, longest first
Perm class_representative(const Partition& type, int d);

// canonical representative under simultaneous conjugation
Tuple canonical_tuple(const Tuple& t);

struct SearchOptions {
  double max_candidates = 5e8;
};

// simultaneous-conjugacy classes of Hurwitz factorizations, sorted
std::vector<Tuple> search_factorizations(const BranchData& bd, const SearchOptions& opt = {});

// elementary move at position i (0-based): (s_i, s_{i+1}) -> (s_i s_{i+1} s_i^-1, s_i); inverse when !forward
Tuple braid_move(const Tuple& t, int i, bool forward = true);

struct OrbitResult {
  int orbits = 0;
  std::vector<int> orbit_of;  // per input class
  int explored = 0;           // canonical tuples visited, over all orderings of the branch data
};

OrbitResult braid_orbits(const std::vector<Tuple>& classes);

BranchData critically_fixed_branch_data(const Partition& p, int d);
// wraps a monodromy tuple; throws DomainError unless it is a valid factorization of its own branch data
Tuple from_monodromy(const std::vector<Perm>& ms);
BranchData branch_data_of(const Tuple& t);

}  // namespace critfix
