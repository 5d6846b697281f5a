#include "critfix/planar_map.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace critfix {

namespace {

bool is_perm(const std::vector<int>& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

}  // namespace

PlanarMap::PlanarMap(std::vector<int> opp, std::vector<int> nxt) : opp_(std::move(opp)), nxt_(std::move(nxt)) {
  if (opp_.size() != nxt_.size()) throw DomainError("opposite and next tables differ in length");
  if (opp_.size() % 2) throw DomainError("odd dart count");
  if (!is_perm(opp_) || !is_perm(nxt_)) throw DomainError("dart tables must be permutations");
  for (int x = 0; x < darts(); ++x)
    if (opp_[x] == x || opp_[opp_[x]] != x) throw DomainError("opposite must be a fixed-point-free involution");
  build();
}

void PlanarMap::build() {
  const int n = darts();
  prv_.assign(n, 0);
  for (int x = 0; x < n; ++x) prv_[nxt_[x]] = x;

  vert_of_.assign(n, -1);
  vertices_.clear();
  for (int x = 0; x < n; ++x) {
    if (vert_of_[x] >= 0) continue;
    std::vector<int> orbit;
    for (int y = x; vert_of_[y] < 0; y = nxt_[y]) {
      vert_of_[y] = static_cast<int>(vertices_.size());
      orbit.push_back(y);
    }
    vertices_.push_back(std::move(orbit));
  }

  face_of_.assign(n, -1);
  faces_.clear();
  for (int x = 0; x < n; ++x) {
    if (face_of_[x] >= 0) continue;
    std::vector<int> orbit;
    for (int y = x; face_of_[y] < 0; y = phi(y)) {
      face_of_[y] = static_cast<int>(faces_.size());
      orbit.push_back(y);
    }
    faces_.push_back(std::move(orbit));
  }

  edge_of_.assign(n, -1);
  edge_rep_.clear();
  for (int x = 0; x < n; ++x) {
    if (edge_of_[x] >= 0) continue;
    edge_of_[x] = edge_of_[opp_[x]] = static_cast<int>(edge_rep_.size());
    edge_rep_.push_back(x);
  }

  comp_of_vertex_.assign(vertices_.size(), -1);
  comp_count_ = 0;
  for (int v = 0; v < vertex_count(); ++v) {
    if (comp_of_vertex_[v] >= 0) continue;
    std::vector<int> stack{v};
    comp_of_vertex_[v] = comp_count_;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int x : vertices_[a]) {
        int b = vert_of_[opp_[x]];
        if (comp_of_vertex_[b] < 0) {
          comp_of_vertex_[b] = comp_count_;
          stack.push_back(b);
        }
      }
    }
    ++comp_count_;
  }
}

int WeightedSimpleGraph::weight(int u, int v) const {
  if (u > v) std::swap(u, v);
  for (const auto& e : edges)
    if (e.u == u && e.v == v) return e.weight;
  return 0;
}

ValidationReport validate(const std::vector<int>& opp, const std::vector<int>& nxt) {
  ValidationReport r;
  auto fail = [&](const std::string& s) {
    r.ok = false;
    r.problems.push_back(s);
  };
  if (opp.size() != nxt.size()) {
    fail("opposite and next tables differ in length");
    return r;
  }
  if (opp.size() % 2) fail("odd dart count");
  if (!is_perm(opp)) fail("opposite is not a permutation");
  if (!is_perm(nxt)) fail("next is not a permutation");
  if (!r.ok) return r;
  for (int x = 0; x < static_cast<int>(opp.size()); ++x)
    if (opp[x] == x || opp[opp[x]] != x) {
      fail("opposite is not a fixed-point-free involution at dart " + std::to_string(x));
      return r;
    }
  PlanarMap g(opp, nxt);
  for (int x = 0; x < g.darts(); ++x)
    if (g.vertex_of(x) == g.vertex_of(g.opp(x)) && x < g.opp(x))
      fail("loop: darts " + std::to_string(x) + " and " + std::to_string(g.opp(x)) + " share a vertex");
  std::vector<int> V(g.component_count(), 0), E(g.component_count(), 0), F(g.component_count(), 0);
  for (int v = 0; v < g.vertex_count(); ++v) V[g.component_of_vertex(v)]++;
  for (int x = 0; x < g.darts(); ++x)
    if (x < g.opp(x)) E[g.component_of_vertex(g.vertex_of(x))]++;
  for (int f = 0; f < g.face_count(); ++f) F[g.component_of_vertex(g.vertex_of(g.face_darts(f)[0]))]++;
  for (int c = 0; c < g.component_count(); ++c) {
    int chi = V[c] - E[c] + F[c];
    if (chi != 2)
      fail("genus: component " + std::to_string(c) + " has V-E+F = " + std::to_string(chi));
  }
  return r;
}

ValidationReport validate(const PlanarMap& g) { return validate(g.opp_table(), g.nxt_table()); }

Partition valence_partition(const PlanarMap& g) {
  Partition p;
  for (int v = 0; v < g.vertex_count(); ++v) p.push_back(g.valence(v));
  std::sort(p.rbegin(), p.rend());
  return p;
}

namespace {

// breadth-first code of the component containing s; returns false early when
// the partial code already exceeds `best` (if given)
bool bfs_code(const PlanarMap& g, int s, std::vector<int>& label, std::vector<int>& order, std::vector<int>& code,
              const std::vector<int>* best) {
  std::fill(label.begin(), label.end(), -1);
  order.clear();
  code.clear();
  label[s] = 0;
  order.push_back(s);
  bool tie = best != nullptr;
  for (std::size_t k = 0; k < order.size(); ++k) {
    int x = order[k];
    for (int y : {g.opp(x), g.nxt(x)}) {
      if (label[y] < 0) {
        label[y] = static_cast<int>(order.size());
        order.push_back(y);
      }
      code.push_back(label[y]);
      if (tie) {
        int b = (*best)[code.size() - 1];
        if (code.back() > b) return false;
        if (code.back() < b) tie = false;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<int> canonical_form(const PlanarMap& g) {
  const int n = g.darts();
  // components by dart reachability
  std::vector<int> comp(n, -1);
  int nc = 0;
  for (int x = 0; x < n; ++x) {
    if (comp[x] >= 0) continue;
    std::vector<int> st{x};
    comp[x] = nc;
    while (!st.empty()) {
      int a = st.back();
      st.pop_back();
      for (int b : {g.opp(a), g.nxt(a)})
        if (comp[b] < 0) {
          comp[b] = nc;
          st.push_back(b);
        }
    }
    ++nc;
  }
  std::vector<std::vector<int>> codes(nc);
  std::vector<int> label(n), order, code;
  for (int x = 0; x < n; ++x) {
    auto& best = codes[comp[x]];
    if (best.empty()) {
      bfs_code(g, x, label, order, code, nullptr);
      best = code;
    } else if (bfs_code(g, x, label, order, code, &best)) {
      if (code < best) best = code;
    }
  }
  std::sort(codes.begin(), codes.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<int> out{n, nc};
  for (const auto& c : codes) {
    out.push_back(-1);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

bool isomorphic(const PlanarMap& a, const PlanarMap& b) {
  if (a.darts() != b.darts()) return false;
  return canonical_form(a) == canonical_form(b);
}

PlanarMap relabel_darts(const PlanarMap& g, const std::vector<int>& perm) {
  const int n = g.darts();
  std::vector<int> opp(n), nxt(n);
  for (int x = 0; x < n; ++x) {
    opp[perm[x]] = perm[g.opp(x)];
    nxt[perm[x]] = perm[g.nxt(x)];
  }
  return PlanarMap(opp, nxt);
}

PlanarMap mirror(const PlanarMap& g) {
  std::vector<int> nxt(g.darts());
  for (int x = 0; x < g.darts(); ++x) nxt[x] = g.prv(x);
  return PlanarMap(g.opp_table(), nxt);
}

PlanarMap disjoint_union(const PlanarMap& a, const PlanarMap& b) {
  std::vector<int> opp = a.opp_table(), nxt = a.nxt_table();
  const int off = a.darts();
  for (int x = 0; x < b.darts(); ++x) {
    opp.push_back(b.opp(x) + off);
    nxt.push_back(b.nxt(x) + off);
  }
  return PlanarMap(opp, nxt);
}

namespace {

PlanarMap checked(std::vector<int> opp, std::vector<int> nxt, const char* what) {
  auto rep = validate(opp, nxt);
  if (!rep.ok) throw DomainError(std::string(what) + ": " + rep.problems.front());
  return PlanarMap(std::move(opp), std::move(nxt));
}

void insert_before(std::vector<int>& nxt, int newdart, int c) {
  int p = 0;
  for (int x = 0; x < static_cast<int>(nxt.size()); ++x)
    if (nxt[x] == c) p = x;
  nxt[p] = newdart;
  nxt[newdart] = c;
}

}  // namespace

PlanarMap insert_edge_in_face(const PlanarMap& g, int c1, int c2) {
  const int n = g.darts();
  if (c1 < 0 || c1 >= n || c2 < 0 || c2 >= n) throw DomainError("corner out of range");
  if (g.vertex_of(c1) == g.vertex_of(c2)) throw DomainError("insert_edge_in_face: corners at the same vertex");
  bool same_comp = g.component_of_vertex(g.vertex_of(c1)) == g.component_of_vertex(g.vertex_of(c2));
  if (same_comp && g.face_of(c1) != g.face_of(c2))
    throw DomainError("insert_edge_in_face: corners not on a common face");
  std::vector<int> opp = g.opp_table(), nxt = g.nxt_table();
  opp.push_back(n + 1);
  opp.push_back(n);
  nxt.push_back(n);
  nxt.push_back(n + 1);
  insert_before(nxt, n, c1);
  insert_before(nxt, n + 1, c2);
  return checked(std::move(opp), std::move(nxt), "insert_edge_in_face");
}

PlanarMap subdivide_edge(const PlanarMap& g, int x) {
  const int n = g.darts();
  if (x < 0 || x >= n) throw DomainError("subdivide_edge: dart out of range");
  int y = g.opp(x);
  std::vector<int> opp = g.opp_table(), nxt = g.nxt_table();
  int p = n, q = n + 1;
  opp.push_back(x);
  opp.push_back(y);
  opp[x] = p;
  opp[y] = q;
  nxt.push_back(q);
  nxt.push_back(p);
  return checked(std::move(opp), std::move(nxt), "subdivide_edge");
}

PlanarMap add_leaf(const PlanarMap& g, int c) {
  const int n = g.darts();
  if (c < 0 || c >= n) throw DomainError("add_leaf: corner out of range");
  std::vector<int> opp = g.opp_table(), nxt = g.nxt_table();
  opp.push_back(n + 1);
  opp.push_back(n);
  nxt.push_back(n);
  nxt.push_back(n + 1);
  insert_before(nxt, n, c);
  return checked(std::move(opp), std::move(nxt), "add_leaf");
}

PlanarMap delete_edge(const PlanarMap& g, int x) {
  const int n = g.darts();
  if (x < 0 || x >= n) throw DomainError("delete_edge: dart out of range");
  int y = g.opp(x);
  if (g.valence(g.vertex_of(x)) == 1 || g.valence(g.vertex_of(y)) == 1)
    throw DomainError("delete_edge: would isolate a vertex");
  std::vector<int> nxt = g.nxt_table();
  for (int d : {x, y}) {
    int p = 0;
    for (int z = 0; z < n; ++z)
      if (nxt[z] == d) p = z;
    nxt[p] = nxt[d];
  }
  std::vector<int> newid(n, -1);
  int k = 0;
  for (int z = 0; z < n; ++z)
    if (z != x && z != y) newid[z] = k++;
  std::vector<int> opp2(k), nxt2(k);
  for (int z = 0; z < n; ++z) {
    if (newid[z] < 0) continue;
    opp2[newid[z]] = newid[g.opp(z)];
    nxt2[newid[z]] = newid[nxt[z]];
  }
  return checked(std::move(opp2), std::move(nxt2), "delete_edge");
}

PlanarMap move_dart(const PlanarMap& g, int x, int c) {
  const int n = g.darts();
  if (x < 0 || x >= n || c < 0 || c >= n) throw DomainError("move_dart: dart out of range");
  if (g.valence(g.vertex_of(x)) == 1) throw DomainError("move_dart: would isolate a vertex");
  if (g.vertex_of(x) == g.vertex_of(c)) throw DomainError("move_dart: target corner at the same vertex");
  std::vector<int> nxt = g.nxt_table();
  nxt[g.prv(x)] = g.nxt(x);
  int p = g.prv(c);
  nxt[p] = x;
  nxt[x] = c;
  return checked(g.opp_table(), std::move(nxt), "move_dart");
}

WeightedSimpleGraph to_simple(const PlanarMap& g) {
  std::map<std::pair<int, int>, int> w;
  for (int x = 0; x < g.darts(); ++x) {
    if (x > g.opp(x)) continue;
    int u = g.vertex_of(x), v = g.vertex_of(g.opp(x));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    w[{u, v}]++;
  }
  WeightedSimpleGraph s;
  s.vertex_count = g.vertex_count();
  for (const auto& [k, m] : w) s.edges.push_back({k.first, k.second, m});
  return s;
}

std::vector<int> abstract_canonical_form(const WeightedSimpleGraph& g) {
  const int n = g.vertex_count;
  std::vector<std::vector<int>> M(n, std::vector<int>(n, 0));
  for (const auto& e : g.edges) M[e.u][e.v] = M[e.v][e.u] = e.weight;
  // vertex invariant: (weighted degree, simple degree, sorted incident weights)
  std::vector<std::vector<int>> inv(n);
  for (int v = 0; v < n; ++v) {
    int wd = 0, sd = 0;
    std::vector<int> ws;
    for (int u = 0; u < n; ++u)
      if (M[v][u]) {
        wd += M[v][u];
        ++sd;
        ws.push_back(M[v][u]);
      }
    std::sort(ws.begin(), ws.end());
    inv[v] = {wd, sd};
    inv[v].insert(inv[v].end(), ws.begin(), ws.end());
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return inv[a] < inv[b]; });
  // blocks of equal invariant
  std::vector<std::pair<int, int>> blocks;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && inv[order[j]] == inv[order[i]]) ++j;
    blocks.push_back({i, j});
    i = j;
  }
  std::vector<int> best;
  std::vector<int> cur = order;
  std::function<void(std::size_t)> rec = [&](std::size_t b) {
    if (b == blocks.size()) {
      std::vector<int> code;
      code.reserve(n * n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) code.push_back(M[cur[i]][cur[j]]);
      if (best.empty() || code < best) best = code;
      return;
    }
    auto [lo, hi] = blocks[b];
    std::sort(cur.begin() + lo, cur.begin() + hi);
    do {
      rec(b + 1);
    } while (std::next_permutation(cur.begin() + lo, cur.begin() + hi));
  };
  rec(0);
  std::vector<int> out{n};
  for (int i = 0; i < n; ++i) out.insert(out.end(), inv[order[i]].begin(), inv[order[i]].end());
  out.push_back(-1);
  out.insert(out.end(), best.begin(), best.end());
  return out;
}

bool abstract_isomorphic(const WeightedSimpleGraph& a, const WeightedSimpleGraph& b) {
  return abstract_canonical_form(a) == abstract_canonical_form(b);
}

PlanarMap from_rotation(const std::vector<std::vector<int>>& nbrs) {
  const int nv = static_cast<int>(nbrs.size());
  std::vector<std::vector<int>> dart_id(nv);
  int n = 0;
  for (int v = 0; v < nv; ++v)
    for (std::size_t k = 0; k < nbrs[v].size(); ++k) dart_id[v].push_back(n++);
  std::vector<int> nxt(n);
  for (int v = 0; v < nv; ++v) {
    const auto& ds = dart_id[v];
    for (std::size_t k = 0; k < ds.size(); ++k) nxt[ds[k]] = ds[(k + 1) % ds.size()];
  }
  // group positions per unordered pair
  struct Group {
    int u, v;
    std::vector<int> du, dv;
  };
  std::vector<Group> groups;
  std::map<std::pair<int, int>, int> gidx;
  for (int v = 0; v < nv; ++v)
    for (std::size_t k = 0; k < nbrs[v].size(); ++k) {
      int w = nbrs[v][k];
      if (w < 0 || w >= nv || w == v) throw DomainError("from_rotation: bad neighbor");
      auto key = std::make_pair(std::min(v, w), std::max(v, w));
      if (!gidx.count(key)) {
        gidx[key] = static_cast<int>(groups.size());
        groups.push_back({key.first, key.second, {}, {}});
      }
      auto& gr = groups[gidx[key]];
      (v == gr.u ? gr.du : gr.dv).push_back(dart_id[v][k]);
    }
  for (const auto& gr : groups)
    if (gr.du.size() != gr.dv.size()) throw DomainError("from_rotation: asymmetric adjacency");
  std::vector<int> opp(n, -1);
  // try cyclic shifts of the reversed pairing for every multi-edge group
  std::vector<int> shift(groups.size(), 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t gi) -> bool {
    if (gi == groups.size()) return validate(opp, nxt).ok;
    const auto& gr = groups[gi];
    int k = static_cast<int>(gr.du.size());
    for (int s = 0; s < k; ++s) {
      for (int i = 0; i < k; ++i) {
        int a = gr.du[i], b = gr.dv[((k - 1 - i) + s) % k];
        opp[a] = b;
        opp[b] = a;
      }
      if (rec(gi + 1)) return true;
    }
    return false;
  };
  if (!rec(0)) throw DomainError("from_rotation: rotation system is not planar");
  return PlanarMap(opp, nxt);
}

PlanarMap single_edge() { return from_rotation({{1}, {0}}); }

PlanarMap parallel_edges(int k) {
  return from_rotation({std::vector<int>(k, 1), std::vector<int>(k, 0)});
}

PlanarMap cycle_graph(int k) {
  std::vector<std::vector<int>> nb(k);
  for (int i = 0; i < k; ++i) nb[i] = {(i + 1) % k, (i + k - 1) % k};
  return from_rotation(nb);
}

PlanarMap path_graph(int edges) {
  std::vector<std::vector<int>> nb(edges + 1);
  for (int i = 0; i < edges; ++i) {
    nb[i].push_back(i + 1);
    nb[i + 1].push_back(i);
  }
  return from_rotation(nb);
}

std::string to_dot(const PlanarMap& g) {
  auto s = to_simple(g);
  std::ostringstream os;
  os << "graph G {\n";
  auto name = [&](int v) {
    if (v < static_cast<int>(g.vertex_names.size()) && !g.vertex_names[v].empty()) return g.vertex_names[v];
    return "v" + std::to_string(v);
  };
  for (int v = 0; v < g.vertex_count(); ++v)
    os << "  \"" << name(v) << "\" [label=\"" << name(v) << " (" << g.valence(v) << ")\"];\n";
  for (const auto& e : s.edges) {
    os << "  \"" << name(e.u) << "\" -- \"" << name(e.v) << "\"";
    if (e.weight > 1) os << " [label=\"" << e.weight << "\", penwidth=" << e.weight << "]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace critfix
