#include "critfix/tischler.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace critfix {

int TischlerGraph::c_count() const { return static_cast<int>(std::count(color.begin(), color.end(), Color::C)); }
int TischlerGraph::r_count() const { return static_cast<int>(std::count(color.begin(), color.end(), Color::R)); }

TischlerGraph tischler_from_graph(const PlanarMap& g) {
  if (!g.connected()) throw DomainError("tischler_from_graph: graph is disconnected");
  const int n = g.darts();
  std::vector<int> opp(2 * n), nxt(2 * n);
  for (int x = 0; x < n; ++x) {
    opp[2 * x] = 2 * x + 1;
    opp[2 * x + 1] = 2 * x;
    nxt[2 * x] = 2 * g.nxt(x);
    // around a face point the corners follow the face cycle backwards
    nxt[2 * x + 1] = 2 * g.opp(g.prv(x)) + 1;
  }
  if (!validate(opp, nxt).ok) throw DomainError("internal: Tischler embedding is not planar");
  TischlerGraph t{PlanarMap(opp, nxt), {}};
  for (int v = 0; v < t.map.vertex_count(); ++v)
    t.color.push_back(t.map.vertex_darts(v).front() % 2 == 0 ? Color::C : Color::R);
  return t;
}

PlanarMap graph_from_tischler(const TischlerGraph& t) {
  const PlanarMap& m = t.map;
  if (static_cast<int>(t.color.size()) != m.vertex_count()) throw DomainError("coloring does not match the map");
  if (!m.connected()) throw DomainError("graph_from_tischler: Tischler graph is disconnected");
  auto col = [&](int x) { return t.color[m.vertex_of(x)]; };
  const int F = m.face_count();
  // G darts 2k, 2k+1 belong to face k; slot[x] = G dart placed in the corner named by T dart x
  std::vector<int> slot(m.darts(), -1);
  for (int f = 0; f < F; ++f) {
    const auto& fd = m.face_darts(f);
    std::vector<int> cs;
    for (int x : fd)
      if (col(x) == Color::C) cs.push_back(x);
    if (fd.size() != 4 || cs.size() != 2 || col(fd[0]) == col(fd[1]))
      throw DomainError("graph_from_tischler: face " + std::to_string(f) +
                        " is not a quadrilateral with two critical vertices");
    if (m.vertex_of(cs[0]) == m.vertex_of(cs[1]))
      throw DomainError("graph_from_tischler: face " + std::to_string(f) + " would produce a loop");
    slot[cs[0]] = 2 * f;
    slot[cs[1]] = 2 * f + 1;
  }
  std::vector<int> opp(2 * F), nxt(2 * F);
  for (int f = 0; f < F; ++f) {
    opp[2 * f] = 2 * f + 1;
    opp[2 * f + 1] = 2 * f;
  }
  for (int v = 0; v < m.vertex_count(); ++v) {
    if (t.color[v] != Color::C) continue;
    std::vector<int> ring;
    for (int x : m.vertex_darts(v))
      if (slot[x] >= 0) ring.push_back(slot[x]);
    for (std::size_t k = 0; k < ring.size(); ++k) nxt[ring[k]] = ring[(k + 1) % ring.size()];
  }
  auto rep = validate(opp, nxt);
  if (!rep.ok) throw DomainError("graph_from_tischler: " + rep.problems.front());
  return PlanarMap(opp, nxt);
}

Report tischler_invariants(const TischlerGraph& t, int d) {
  Report r;
  auto fail = [&](std::string s) {
    r.ok = false;
    r.problems.push_back(std::move(s));
  };
  const PlanarMap& m = t.map;
  for (int x = 0; x < m.darts(); ++x)
    if (t.color[m.vertex_of(x)] == t.color[m.vertex_of(m.opp(x))]) {
      fail("edge joins two vertices of the same color");
      break;
    }
  if (m.edge_count() != 2 * d - 2) fail("edge count " + std::to_string(m.edge_count()) + " != 2d-2");
  if (t.c_count() + t.r_count() > d + 1) fail("|C|+|R| exceeds d+1");
  if (t.c_count() < 2 || t.c_count() > d) fail("|C| outside [2, d]");

  // bigons: parallel edges between a C vertex and an R vertex
  for (int a = 0; a < m.darts(); ++a) {
    if (t.color[m.vertex_of(a)] != Color::C) continue;
    for (int b = a + 1; b < m.darts(); ++b) {
      if (m.vertex_of(b) != m.vertex_of(a) || m.vertex_of(m.opp(b)) != m.vertex_of(m.opp(a))) continue;
      // faces on each side of the 2-cycle: dual components avoiding edges a and b
      std::vector<int> parent(m.face_count());
      for (int f = 0; f < m.face_count(); ++f) parent[f] = f;
      auto find = [&](int f) {
        while (parent[f] != f) f = parent[f] = parent[parent[f]];
        return f;
      };
      for (int x = 0; x < m.darts(); ++x) {
        if (m.edge_of(x) == m.edge_of(a) || m.edge_of(x) == m.edge_of(b)) continue;
        parent[find(m.face_of(x))] = find(m.face_of(m.opp(x)));
      }
      const int v = m.vertex_of(a), w = m.vertex_of(m.opp(a));
      int side1 = find(m.face_of(a)), side2 = find(m.face_of(m.opp(a)));
      bool c1 = false, c2 = false;
      for (int x = 0; x < m.darts(); ++x) {
        int u = m.vertex_of(x);
        if (u == v || u == w || t.color[u] != Color::C) continue;
        int s = find(m.face_of(x));
        if (s == side1) c1 = true;
        if (s == side2) c2 = true;
      }
      if (side1 == side2 || !c1 || !c2)
        fail("bigon at darts " + std::to_string(a) + "," + std::to_string(b) + " has a side without critical points");
    }
  }
  return r;
}

PlanarMap star_graph(int d) {
  if (d < 2) throw DomainError("star_graph needs d >= 2");
  std::vector<std::vector<int>> nbrs(d);
  for (int k = 1; k < d; ++k) {
    nbrs[0].push_back(k);
    nbrs[k].push_back(0);
  }
  return from_rotation(nbrs);
}

bool is_star(const PlanarMap& g) {
  if (!g.connected() || g.edge_count() == 0) return false;
  const int e = g.edge_count();
  int centers = 0, leaves = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.valence(v) == e) ++centers;
    if (g.valence(v) == 1) ++leaves;
  }
  if (e == 1) return g.vertex_count() == 2;
  return centers == 1 && leaves == e && g.vertex_count() == e + 1;
}

}  // namespace critfix
