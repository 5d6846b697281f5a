#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace oracle {

using critfix::Partition;
using critfix::PlanarMap;

namespace {

// cycle label per element and the cycle lengths
int cycles_of(const std::vector<int>& p, std::vector<int>& label, std::vector<int>& lengths) {
  const int n = static_cast<int>(p.size());
  label.assign(n, -1);
  lengths.clear();
  int c = 0;
  for (int s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    int len = 0;
    for (int x = s; label[x] < 0; x = p[x]) {
      label[x] = c;
      ++len;
    }
    lengths.push_back(len);
    ++c;
  }
  return c;
}

int find(std::vector<int>& u, int x) {
  while (u[x] != x) x = u[x] = u[u[x]];
  return x;
}

bool iso_from(const std::vector<int>& oa, const std::vector<int>& na, const std::vector<int>& ob,
              const std::vector<int>& nb, int y) {
  const int n = static_cast<int>(oa.size());
  std::vector<int> m(n, -1), inv(n, -1);
  std::vector<int> stack{0};
  m[0] = y;
  inv[y] = 0;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    const int pairs[2][2] = {{oa[x], ob[m[x]]}, {na[x], nb[m[x]]}};
    for (const auto& pr : pairs) {
      int s = pr[0], t = pr[1];
      if (m[s] < 0 && inv[t] < 0) {
        m[s] = t;
        inv[t] = s;
        stack.push_back(s);
      } else if (m[s] != t) {
        return false;
      }
    }
  }
  return std::find(m.begin(), m.end(), -1) == m.end();
}

std::vector<int> sorted_face_lengths(const PlanarMap& g) {
  std::vector<int> f;
  for (const auto& face : g.faces()) f.push_back(static_cast<int>(face.size()));
  std::sort(f.begin(), f.end());
  return f;
}

std::vector<int> compose_lr(const std::vector<int>& p, const std::vector<int>& q) {
  std::vector<int> r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

std::vector<int> invert(const std::vector<int>& p) {
  std::vector<int> r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

Partition type_of(const std::vector<int>& p) {
  std::vector<int> label, lengths;
  cycles_of(p, label, lengths);
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

Partition padded(Partition t, int d) {
  int s = std::accumulate(t.begin(), t.end(), 0);
  while (s < d) {
    t.push_back(1);
    ++s;
  }
  std::sort(t.rbegin(), t.rend());
  return t;
}

}  // namespace

bool naive_isomorphic(const PlanarMap& a, const PlanarMap& b) {
  if (a.darts() != b.darts()) return false;
  if (a.darts() == 0) return true;
  for (int y = 0; y < b.darts(); ++y)
    if (iso_from(a.opp_table(), a.nxt_table(), b.opp_table(), b.nxt_table(), y)) return true;
  return false;
}

std::map<Partition, std::vector<PlanarMap>> naive_planar_classes(int edges) {
  const int n = 2 * edges;
  std::vector<int> opp(n);
  for (int x = 0; x < n; ++x) opp[x] = x ^ 1;
  std::vector<int> nxt(n), vlabel, vlen, flabel, flen, phi(n);
  std::iota(nxt.begin(), nxt.end(), 0);
  std::map<Partition, std::vector<PlanarMap>> out;
  std::map<Partition, std::vector<std::vector<int>>> face_keys;
  do {
    int v = cycles_of(nxt, vlabel, vlen);
    bool loop = false;
    for (int x = 0; x < n && !loop; x += 2) loop = vlabel[x] == vlabel[x + 1];
    if (loop) continue;
    for (int x = 0; x < n; ++x) phi[x] = nxt[opp[x]];
    int f = cycles_of(phi, flabel, flen);
    if (v - edges + f != 2) continue;
    std::vector<int> u(v);
    std::iota(u.begin(), u.end(), 0);
    for (int x = 0; x < n; x += 2) u[find(u, vlabel[x])] = find(u, vlabel[x + 1]);
    int comps = 0;
    for (int k = 0; k < v; ++k) comps += find(u, k) == k;
    if (comps != 1) continue;
    Partition p = vlen;
    std::sort(p.rbegin(), p.rend());
    std::sort(flen.begin(), flen.end());
    auto& reps = out[p];
    auto& keys = face_keys[p];
    PlanarMap g(opp, nxt);
    bool seen = false;
    for (std::size_t k = 0; k < reps.size() && !seen; ++k)
      seen = keys[k] == flen && naive_isomorphic(reps[k], g);
    if (!seen) {
      reps.push_back(g);
      keys.push_back(flen);
    }
  } while (std::next_permutation(nxt.begin(), nxt.end()));
  return out;
}

int naive_abstract_classes(const std::vector<PlanarMap>& maps) {
  auto adjacency = [](const PlanarMap& g) {
    const int v = g.vertex_count();
    std::vector<std::vector<int>> a(v, std::vector<int>(v, 0));
    for (int x = 0; x < g.darts(); ++x) a[g.vertex_of(x)][g.vertex_of(g.opp(x))]++;
    return a;
  };
  std::vector<std::vector<std::vector<int>>> reps;
  for (const auto& g : maps) {
    auto a = adjacency(g);
    const int v = static_cast<int>(a.size());
    bool seen = false;
    for (const auto& b : reps) {
      if (static_cast<int>(b.size()) != v) continue;
      std::vector<int> s(v);
      std::iota(s.begin(), s.end(), 0);
      do {
        bool ok = true;
        for (int i = 0; i < v && ok; ++i)
          for (int j = 0; j < v && ok; ++j) ok = a[i][j] == b[s[i]][s[j]];
        if (ok) seen = true;
      } while (!seen && std::next_permutation(s.begin(), s.end()));
      if (seen) break;
    }
    if (!seen) reps.push_back(a);
  }
  return static_cast<int>(reps.size());
}

std::vector<std::vector<int>> naive_canonical(const std::vector<std::vector<int>>& tuple) {
  const int d = static_cast<int>(tuple.front().size());
  std::vector<int> x(d);
  std::iota(x.begin(), x.end(), 0);
  std::vector<std::vector<int>> best;
  do {
    std::vector<int> xi = invert(x);
    std::vector<std::vector<int>> c;
    for (const auto& s : tuple) c.push_back(compose_lr(compose_lr(xi, s), x));
    if (best.empty() || c < best) best = c;
  } while (std::next_permutation(x.begin(), x.end()));
  return best;
}

std::vector<std::vector<std::vector<int>>> naive_hurwitz_classes(int d, const std::vector<Partition>& types_in) {
  std::vector<Partition> types;
  for (const auto& t : types_in) types.push_back(padded(t, d));
  std::vector<std::vector<int>> all;
  std::vector<int> p(d);
  std::iota(p.begin(), p.end(), 0);
  do all.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::vector<std::vector<std::vector<int>>> pools;
  for (const auto& t : types) {
    pools.emplace_back();
    for (const auto& q : all)
      if (type_of(q) == t) pools.back().push_back(q);
  }
  std::set<std::vector<std::vector<int>>> found;
  const int k = static_cast<int>(types.size());
  std::vector<std::vector<int>> cur;
  std::vector<int> id(d);
  std::iota(id.begin(), id.end(), 0);

  auto transitive = [&](const std::vector<std::vector<int>>& t) {
    std::vector<int> u(d);
    std::iota(u.begin(), u.end(), 0);
    for (const auto& s : t)
      for (int i = 0; i < d; ++i) u[find(u, i)] = find(u, s[i]);
    for (int i = 0; i < d; ++i)
      if (find(u, i) != find(u, 0)) return false;
    return true;
  };

  auto rec = [&](auto&& self, int i, const std::vector<int>& prod) -> void {
    if (i == k - 1) {
      std::vector<int> last = invert(prod);
      if (type_of(last) != types[i]) return;
      cur.push_back(last);
      if (transitive(cur)) found.insert(naive_canonical(cur));
      cur.pop_back();
      return;
    }
    for (const auto& s : pools[i]) {
      cur.push_back(s);
      self(self, i + 1, compose_lr(prod, s));
      cur.pop_back();
    }
  };
  if (k >= 1) rec(rec, 0, id);
  return {found.begin(), found.end()};
}

}  // namespace oracle
