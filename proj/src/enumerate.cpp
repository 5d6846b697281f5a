#include "critfix/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace critfix {

namespace {

struct Blocks {
  std::vector<int> nxt, block;
};

Blocks make_blocks(const Partition& p) {
  Blocks b;
  int off = 0;
  for (std::size_t v = 0; v < p.size(); ++v) {
    for (int k = 0; k < p[v]; ++k) {
      b.nxt.push_back(off + (k + 1) % p[v]);
      b.block.push_back(static_cast<int>(v));
    }
    off += p[v];
  }
  return b;
}

// V - E + F for a map whose darts are all reachable from one another (checked separately)
int euler_char(const std::vector<int>& opp, const std::vector<int>& nxt, int vertices) {
  const int n = static_cast<int>(opp.size());
  std::vector<char> seen(n, 0);
  int faces = 0;
  for (int x = 0; x < n; ++x) {
    if (seen[x]) continue;
    ++faces;
    for (int y = x; !seen[y]; y = nxt[opp[y]]) seen[y] = 1;
  }
  return vertices - n / 2 + faces;
}

bool blocks_connected(const std::vector<int>& opp, const Blocks& b, int vertices) {
  std::vector<int> parent(vertices);
  for (int v = 0; v < vertices; ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int comps = vertices;
  for (std::size_t x = 0; x < opp.size(); ++x) {
    int a = find(b.block[x]), c = find(b.block[opp[x]]);
    if (a != c) {
      parent[a] = c;
      --comps;
    }
  }
  return comps == 1;
}

}  // namespace

PlanarMap canonical_representative(const PlanarMap& g) {
  if (!g.connected()) throw DomainError("canonical_representative needs a connected map");
  auto cf = canonical_form(g);
  // layout: [darts, components, -1, opp(0), nxt(0), opp(1), nxt(1), ...]
  const int n = cf[0];
  std::vector<int> opp(n), nxt(n);
  for (int k = 0; k < n; ++k) {
    opp[k] = cf[3 + 2 * k];
    nxt[k] = cf[4 + 2 * k];
  }
  return PlanarMap(opp, nxt);
}

std::vector<PlanarMap> enumerate_planar_classes(const Partition& p_in, int d) {
  if (!is_admissible(p_in, d)) throw DomainError("partition is not admissible for degree " + std::to_string(d));
  const Partition p = normalize_partition(p_in);
  const Blocks b = make_blocks(p);
  const int n = static_cast<int>(b.nxt.size());
  const int V = static_cast<int>(p.size());
  std::map<std::vector<int>, PlanarMap> found;
  std::vector<int> opp(n, -1);

  // pair the least unmatched dart with every admissible partner
  auto rec = [&](auto&& self) -> void {
    int x = 0;
    while (x < n && opp[x] >= 0) ++x;
    if (x == n) {
      if (!blocks_connected(opp, b, V)) return;
      if (euler_char(opp, b.nxt, V) != 2) return;
      PlanarMap g(opp, b.nxt);
      auto cf = canonical_form(g);
      if (!found.count(cf)) found.emplace(cf, canonical_representative(g));
      return;
    }
    for (int y = x + 1; y < n; ++y) {
      if (opp[y] >= 0 || b.block[y] == b.block[x]) continue;
      opp[x] = y;
      opp[y] = x;
      self(self);
      opp[x] = opp[y] = -1;
    }
  };
  rec(rec);

  std::vector<PlanarMap> out;
  for (auto& [cf, g] : found) out.push_back(g);
  return out;
}

std::vector<std::vector<int>> group_abstract(const std::vector<PlanarMap>& planar) {
  std::map<std::vector<int>, std::vector<int>> groups;
  for (std::size_t i = 0; i < planar.size(); ++i)
    groups[abstract_canonical_form(to_simple(planar[i]))].push_back(static_cast<int>(i));
  std::vector<std::vector<int>> out;
  for (auto& [k, v] : groups) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

int enumerate_abstract_classes(const Partition& p, int d) {
  return static_cast<int>(group_abstract(enumerate_planar_classes(p, d)).size());
}

int Census::total_planar() const {
  int t = 0;
  for (const auto& r : rows) t += r.planar;
  return t;
}

Census census(int d, bool include_polynomial) {
  if (d < 2 || d > 8) throw DomainError("census supports 2 <= d <= 8");
  Census c;
  c.d = d;
  for (const auto& p : admissible_partitions(d)) {
    CensusRow row;
    row.partition = p;
    row.flags = classify(p, d);
    if (row.flags.polynomial_type && !include_polynomial) continue;
    row.representatives = enumerate_planar_classes(p, d);
    row.planar = static_cast<int>(row.representatives.size());
    row.abstract = static_cast<int>(group_abstract(row.representatives).size());
    c.rows.push_back(std::move(row));
  }
  return c;
}

}  // namespace critfix
