#include "critfix/realize.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "critfix/partitions.hpp"

namespace critfix {

bool simple_adjacent(const PlanarMap& g, int u, int v) {
  for (int x : g.vertex_darts(u))
    if (g.vertex_of(g.opp(x)) == v) return true;
  return false;
}

int simple_degree(const PlanarMap& g, int v) {
  std::set<int> nb;
  for (int x : g.vertex_darts(v)) nb.insert(g.vertex_of(g.opp(x)));
  return static_cast<int>(nb.size());
}

std::vector<int> shortest_path(const PlanarMap& g, int s, int t) {
  std::vector<int> parent(g.vertex_count(), -1);
  std::deque<int> q{s};
  parent[s] = s;
  while (!q.empty()) {
    int a = q.front();
    q.pop_front();
    if (a == t) break;
    std::set<int> nb;
    for (int x : g.vertex_darts(a)) nb.insert(g.vertex_of(g.opp(x)));
    for (int b : nb)
      if (parent[b] < 0) {
        parent[b] = a;
        q.push_back(b);
      }
  }
  if (parent[t] < 0) return {};
  std::vector<int> path{t};
  while (path.back() != s) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

namespace {

// move dart x to corner c, keeping every anchor on its vertex
PlanarMap move_keep(const PlanarMap& g, int x, int c, std::vector<int>& anchors) {
  PlanarMap r = move_dart(g, x, c);
  for (int& a : anchors)
    if (a == x) a = g.nxt(x);
  return r;
}

std::vector<int> sorted_darts(const PlanarMap& g, int v) {
  std::vector<int> ds = g.vertex_darts(v);
  std::sort(ds.begin(), ds.end());
  return ds;
}

// parallel edge next to the least dart from u to v
PlanarMap add_parallel(const PlanarMap& g, int u, int v) {
  for (int x : sorted_darts(g, u))
    if (g.vertex_of(g.opp(x)) == v) return insert_edge_in_face(g, x, g.phi(x));
  throw DomainError("add_parallel: vertices not adjacent");
}

// Buffer-vertex shift on anchors. Returns false if no buffer vertex qualifies.
bool shift_anchors(PlanarMap& g, int a1, int a2, const std::set<int>& exclude_vertices, std::vector<int>& anchors) {
  int v1 = g.vertex_of(a1), v2 = g.vertex_of(a2);
  if (!simple_adjacent(g, v1, v2)) throw DomainError("shift_valence: vertices are not adjacent");
  if (simple_degree(g, v1) < 2) throw DomainError("shift_valence: v1 has simple degree below 2");
  for (int x : sorted_darts(g, v1)) {
    int w = g.vertex_of(g.opp(x));
    if (w == v2 || exclude_vertices.count(w)) continue;
    for (int c : sorted_darts(g, v2)) {
      try {
        std::vector<int> trial = anchors;
        PlanarMap h = move_keep(g, x, c, trial);
        if (!h.connected()) continue;
        g = std::move(h);
        anchors = std::move(trial);
        return true;
      } catch (const DomainError&) {
      }
    }
  }
  return false;
}

void increment_pair_anchors(PlanarMap& g, int as, int at, std::vector<int>& anchors) {
  int s = g.vertex_of(as), t = g.vertex_of(at);
  if (s == t) throw DomainError("increment_pair: s and t must differ");
  if (simple_adjacent(g, s, t)) {
    g = add_parallel(g, s, t);
    return;
  }
  auto path = shortest_path(g, s, t);
  if (path.empty()) throw DomainError("increment_pair: graph is disconnected");
  if (g.vertex_count() < 3) throw DomainError("increment_pair: needs at least three vertices");
  g = add_parallel(g, s, path[1]);
  // vertex handles along the walk
  std::vector<int> track = anchors;
  auto anchor_of = [&](int v) { return g.vertex_darts(v).front(); };
  int prev_anchor = anchor_of(s);
  int cur_anchor = anchor_of(path[1]);
  int next_anchor = anchor_of(path[2]);
  int t_anchor = at;
  std::vector<int> path_anchors;
  for (std::size_t k = 1; k < path.size(); ++k) path_anchors.push_back(anchor_of(path[k]));
  while (true) {
    std::set<int> exclude;
    for (int a : path_anchors) exclude.insert(g.vertex_of(a));
    exclude.erase(g.vertex_of(prev_anchor));
    std::vector<int> all = track;
    all.push_back(prev_anchor);
    all.push_back(cur_anchor);
    all.push_back(next_anchor);
    all.push_back(t_anchor);
    all.insert(all.end(), path_anchors.begin(), path_anchors.end());
    if (!shift_anchors(g, cur_anchor, next_anchor, exclude, all))
      throw DomainError("increment_pair: no buffer vertex available");
    std::size_t k = 0;
    for (; k < track.size(); ++k) track[k] = all[k];
    prev_anchor = all[k++];
    cur_anchor = all[k++];
    next_anchor = all[k++];
    t_anchor = all[k++];
    for (auto& a : path_anchors) a = all[k++];
    if (g.vertex_of(next_anchor) == g.vertex_of(t_anchor)) break;
    auto p2 = shortest_path(g, g.vertex_of(next_anchor), g.vertex_of(t_anchor));
    prev_anchor = cur_anchor;
    cur_anchor = next_anchor;
    next_anchor = anchor_of(p2[1]);
    path_anchors.clear();
    for (std::size_t j = 0; j < p2.size(); ++j) path_anchors.push_back(anchor_of(p2[j]));
  }
  anchors = track;
}

void increment_twice_anchors(PlanarMap& g, int a1, std::vector<int>& anchors) {
  int v1 = g.vertex_of(a1);
  for (int x12 : sorted_darts(g, v1)) {
    int v2 = g.vertex_of(g.opp(x12));
    for (int y : sorted_darts(g, v2)) {
      int v3 = g.vertex_of(g.opp(y));
      if (v3 == v1) continue;
      for (int c : sorted_darts(g, v1)) {
        try {
          std::vector<int> trial = anchors;
          PlanarMap h = move_keep(g, y, c, trial);
          h = add_parallel(h, h.vertex_of(trial.empty() ? a1 : a1), h.vertex_of(g.opp(x12)));
          if (!h.connected()) continue;
          g = std::move(h);
          anchors = std::move(trial);
          return;
        } catch (const DomainError&) {
        }
      }
    }
  }
  throw DomainError("increment_twice: no suitable edge pair");
}

bool rows_admissible(const std::vector<int>& rows, int d) {
  return is_admissible(normalize_partition(rows), d);
}

Realization base_rows(const std::vector<int>& rows, PlanarMap g) {
  // assign rows to vertices with matching valence, in vertex order
  Realization r{std::move(g), std::vector<int>(rows.size(), -1), rows};
  std::vector<char> used(r.graph.vertex_count(), 0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (int v = 0; v < r.graph.vertex_count(); ++v)
      if (!used[v] && r.graph.valence(v) == rows[i]) {
        used[v] = 1;
        r.row_anchor[i] = r.graph.vertex_darts(v).front();
        break;
      }
    if (r.row_anchor[i] < 0) throw DomainError("internal: base graph does not match rows");
  }
  return r;
}

int first_index_of(const std::vector<int>& rows, int value) {
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i] == value) return static_cast<int>(i);
  return -1;
}

std::vector<int> by_size(const std::vector<int>& rows) {
  std::vector<int> idx(rows.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return rows[a] > rows[b]; });
  return idx;
}

}  // namespace

PlanarMap shift_valence(const PlanarMap& g, int v1, int v2, const std::set<int>& exclude) {
  if (v1 < 0 || v2 < 0 || v1 >= g.vertex_count() || v2 >= g.vertex_count())
    throw DomainError("shift_valence: vertex out of range");
  PlanarMap h = g;
  std::vector<int> anchors;
  if (!shift_anchors(h, g.vertex_darts(v1).front(), g.vertex_darts(v2).front(), exclude, anchors))
    throw DomainError("shift_valence: no buffer vertex available");
  return h;
}

PlanarMap increment_pair(const PlanarMap& g, int s, int t) {
  if (s < 0 || t < 0 || s >= g.vertex_count() || t >= g.vertex_count())
    throw DomainError("increment_pair: vertex out of range");
  if (s == t) throw DomainError("increment_pair: s and t must differ");
  PlanarMap h = g;
  std::vector<int> anchors;
  increment_pair_anchors(h, g.vertex_darts(s).front(), g.vertex_darts(t).front(), anchors);
  return h;
}

PlanarMap increment_twice(const PlanarMap& g, int v1) {
  if (v1 < 0 || v1 >= g.vertex_count()) throw DomainError("increment_twice: vertex out of range");
  PlanarMap h = g;
  std::vector<int> anchors;
  increment_twice_anchors(h, g.vertex_darts(v1).front(), anchors);
  return h;
}

Realization realize_connected_rows(const std::vector<int>& rows, int d) {
  if (!rows_admissible(rows, d)) throw DomainError("partition is not admissible for degree " + std::to_string(d));
  const int n = static_cast<int>(rows.size());
  if (d == 2) return base_rows(rows, single_edge());
  if (n == 2) return base_rows(rows, parallel_edges(d - 1));
  if (n == 3 && d == 3) return base_rows(rows, path_graph(2));

  if (n == d) {
    int two = first_index_of(rows, 2);
    if (two >= 0) {
      std::vector<int> pred = rows;
      pred.erase(pred.begin() + two);
      if (rows_admissible(pred, d - 1)) {
        Realization r = realize_connected_rows(pred, d - 1);
        // Case I: replace the least edge v1v2 by a path through a new vertex
        PlanarMap g = subdivide_edge(r.graph, 0);
        int newanchor = g.darts() - 2;
        std::vector<int> anchors = r.row_anchor;
        anchors.insert(anchors.begin() + two, newanchor);
        return Realization{std::move(g), anchors, rows};
      }
    }
    // Case II: new leaf on an existing row
    int one = first_index_of(rows, 1);
    for (int r_idx : by_size(rows)) {
      if (r_idx == one || rows[r_idx] < 2) continue;
      std::vector<int> pred = rows;
      pred[r_idx] -= 1;
      pred.erase(pred.begin() + one);
      if (!rows_admissible(pred, d - 1)) continue;
      Realization r = realize_connected_rows(pred, d - 1);
      int host = r.row_anchor[r_idx > one ? r_idx - 1 : r_idx];
      PlanarMap g = add_leaf(r.graph, host);
      std::vector<int> anchors = r.row_anchor;
      anchors.insert(anchors.begin() + one, g.darts() - 1);
      return Realization{std::move(g), anchors, rows};
    }
    throw DomainError("internal: no inductive case applies");
  }

  // d > n. Case I: one box on each of the two largest rows.
  auto idx = by_size(rows);
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      int i = idx[a], j = idx[b];
      if (rows[i] < 2 || rows[j] < 2) continue;
      std::vector<int> pred = rows;
      pred[i]--;
      pred[j]--;
      if (!rows_admissible(pred, d - 1)) continue;
      Realization r = realize_connected_rows(pred, d - 1);
      std::vector<int> anchors = r.row_anchor;
      increment_pair_anchors(r.graph, anchors[i], anchors[j], anchors);
      return Realization{std::move(r.graph), anchors, rows};
    }
  // Case II: two boxes on one row.
  for (int i : idx) {
    if (rows[i] < 3) continue;
    std::vector<int> pred = rows;
    pred[i] -= 2;
    if (!rows_admissible(pred, d - 1)) continue;
    Realization r = realize_connected_rows(pred, d - 1);
    std::vector<int> anchors = r.row_anchor;
    increment_twice_anchors(r.graph, anchors[i], anchors);
    return Realization{std::move(r.graph), anchors, rows};
  }
  throw DomainError("internal: no inductive case applies");
}

PlanarMap realize_connected(const Partition& p, int d) { return realize_connected_rows(p, d).graph; }

namespace {

bool general_ok(const std::vector<int>& rows, int d) {
  if (d < 2 || rows.empty()) return false;
  int s = 0;
  for (int k : rows) {
    if (k < 1 || k > d - 1) return false;
    s += k;
  }
  return s == 2 * d - 2;
}

// insert an edge between the vertices of two anchors if some pair of corners allows it
bool join_anchors(PlanarMap& g, int a, int b) {
  int u = g.vertex_of(a), v = g.vertex_of(b);
  for (int c1 : sorted_darts(g, u))
    for (int c2 : sorted_darts(g, v)) {
      bool same_comp = g.component_of_vertex(u) == g.component_of_vertex(v);
      if (same_comp && g.face_of(c1) != g.face_of(c2)) continue;
      g = insert_edge_in_face(g, c1, c2);
      return true;
    }
  return false;
}

std::optional<Realization> general_rec(const std::vector<int>& rows, int d) {
  if (!general_ok(rows, d)) return std::nullopt;
  if (d == 2) return base_rows(rows, single_edge());
  const int n = static_cast<int>(rows.size());
  // two new rows of one box: disjoint segment
  std::vector<int> ones;
  for (int i = 0; i < n; ++i)
    if (rows[i] == 1) ones.push_back(i);
  if (ones.size() >= 2) {
    int i = ones[ones.size() - 2], j = ones.back();
    std::vector<int> pred;
    for (int k = 0; k < n; ++k)
      if (k != i && k != j) pred.push_back(rows[k]);
    if (auto r = general_rec(pred, d - 1)) {
      int off = r->graph.darts();
      PlanarMap g = disjoint_union(r->graph, single_edge());
      std::vector<int> anchors;
      int pk = 0;
      for (int k = 0; k < n; ++k) {
        if (k == i)
          anchors.push_back(off);
        else if (k == j)
          anchors.push_back(off + 1);
        else
          anchors.push_back(r->row_anchor[pk++]);
      }
      return Realization{std::move(g), anchors, rows};
    }
  }
  // one box on two distinct rows: join their vertices
  auto idx = by_size(rows);
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      int i = idx[a], j = idx[b];
      if (rows[i] < 2 || rows[j] < 2) continue;
      std::vector<int> pred = rows;
      pred[i]--;
      pred[j]--;
      auto r = general_rec(pred, d - 1);
      if (!r) continue;
      PlanarMap g = r->graph;
      if (!join_anchors(g, r->row_anchor[i], r->row_anchor[j])) continue;
      return Realization{std::move(g), r->row_anchor, rows};
    }
  // new row of two boxes: new vertex splitting an edge
  int two = first_index_of(rows, 2);
  if (two >= 0) {
    std::vector<int> pred = rows;
    pred.erase(pred.begin() + two);
    if (auto r = general_rec(pred, d - 1)) {
      PlanarMap g = subdivide_edge(r->graph, 0);
      std::vector<int> anchors = r->row_anchor;
      anchors.insert(anchors.begin() + two, g.darts() - 2);
      return Realization{std::move(g), anchors, rows};
    }
  }
  // new leaf (needed for stars)
  if (!ones.empty()) {
    int one = ones.front();
    for (int i : idx) {
      if (rows[i] < 2) continue;
      std::vector<int> pred = rows;
      pred[i]--;
      pred.erase(pred.begin() + one);
      auto r = general_rec(pred, d - 1);
      if (!r) continue;
      int host = r->row_anchor[i > one ? i - 1 : i];
      PlanarMap g = add_leaf(r->graph, host);
      std::vector<int> anchors = r->row_anchor;
      anchors.insert(anchors.begin() + one, g.darts() - 1);
      return Realization{std::move(g), anchors, rows};
    }
  }
  return std::nullopt;
}

}  // namespace

Realization realize_general_rows(const std::vector<int>& rows, int d) {
  if (!general_ok(rows, d))
    throw DomainError("branch data not realizable: parts must lie in 1..d-1 and sum to 2d-2");
  auto r = general_rec(rows, d);
  if (!r) throw DomainError("internal: general realization failed");
  return *r;
}

PlanarMap realize_general(const Partition& p, int d) { return realize_general_rows(p, d).graph; }

}  // namespace critfix
