#include "critfix/blowup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace critfix {

int RaySystem::ray_of_vertex(int v) const {
  for (int i = 0; i < ray_count(); ++i)
    if (vertex[i] == v) return i;
  throw DomainError("vertex has no ray");
}

int default_base_face(const PlanarMap& g) {
  int best = -1, best_count = -1, best_dart = 0;
  for (int f = 0; f < g.face_count(); ++f) {
    std::set<int> vs;
    for (int x : g.face_darts(f)) vs.insert(g.vertex_of(x));
    int c = static_cast<int>(vs.size());
    int least = g.face_darts(f).front();
    if (c > best_count || (c == best_count && least < best_dart)) {
      best = f;
      best_count = c;
      best_dart = least;
    }
  }
  return best;
}

namespace {

int phi_inv(const PlanarMap& k, int x) { return k.opp(k.prv(x)); }

struct DualTree {
  std::vector<int> depth, parent_dart;  // parent_dart: G dart on the parent side
};

DualTree dual_tree(const PlanarMap& g, int root) {
  DualTree t;
  t.depth.assign(g.face_count(), -1);
  t.parent_dart.assign(g.face_count(), -1);
  t.depth[root] = 0;
  std::deque<int> q{root};
  while (!q.empty()) {
    int f = q.front();
    q.pop_front();
    std::vector<int> ds = g.face_darts(f);
    std::sort(ds.begin(), ds.end());
    for (int z : ds) {
      int h = g.face_of(g.opp(z));
      if (t.depth[h] >= 0) continue;
      t.depth[h] = t.depth[f] + 1;
      t.parent_dart[h] = z;
      q.push_back(h);
    }
  }
  return t;
}

// G darts crossed from the root face to f
std::vector<int> tree_path(const PlanarMap& g, const DualTree& t, int f) {
  std::vector<int> path;
  while (t.parent_dart[f] >= 0) {
    int z = t.parent_dart[f];
    path.push_back(z);
    f = g.face_of(z);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

struct Route {
  int start_corner = -1;
  std::vector<int> crossings;  // K darts crossed, each in the face being left
  int target = -1;             // G dart naming the target corner
};

// route inside K from b across the given G edges in order, ending in a K face with an unvisited vertex
std::optional<Route> find_route(const PlanarMap& K, int nG, const std::vector<int>& k_edge_of, int m1,
                                const std::vector<int>& path_edges, const std::vector<char>& visited,
                                const PlanarMap& g) {
  const int stages = static_cast<int>(path_edges.size());
  using State = std::pair<int, int>;  // K face, stage
  std::map<State, std::pair<State, int>> parent;  // state -> (previous, crossed dart)
  std::deque<State> q;
  std::map<State, int> start_of;
  int c = m1;
  do {
    c = K.nxt(c);
    State s{K.face_of(c), 0};
    if (!start_of.count(s)) {
      start_of[s] = c;
      parent[s] = {{-1, -1}, -1};
      q.push_back(s);
    }
  } while (c != m1);

  auto unvisited_in = [&](int f) {
    for (int y : K.face_darts(f))
      if (y < nG && !visited[g.vertex_of(y)]) return true;
    return false;
  };

  while (!q.empty()) {
    State s = q.front();
    q.pop_front();
    auto [f, st] = s;
    if (st == stages) {
      if (!unvisited_in(f)) continue;
      Route r;
      State cur = s;
      while (parent[cur].second >= 0) {
        r.crossings.push_back(parent[cur].second);
        cur = parent[cur].first;
      }
      std::reverse(r.crossings.begin(), r.crossings.end());
      r.start_corner = start_of[cur];
      int entry = r.crossings.empty() ? r.start_corner : K.opp(r.crossings.back());
      int y = entry;
      do {
        if (y < nG && !visited[g.vertex_of(y)]) {
          r.target = y;
          break;
        }
        y = phi_inv(K, y);
      } while (y != entry);
      return r;
    }
    for (int z : K.face_darts(f)) {
      if (k_edge_of[z] != path_edges[st]) continue;
      State nx{K.face_of(K.opp(z)), st + 1};
      if (parent.count(nx)) continue;
      parent[nx] = {s, z};
      q.push_back(nx);
    }
  }
  return std::nullopt;
}

}  // namespace

RaySystem choose_rays(const PlanarMap& g, int base_face, int start_dart) {
  if (!g.connected()) throw DomainError("choose_rays: graph is disconnected");
  if (g.darts() == 0) throw DomainError("choose_rays: graph has no edges");
  if (start_dart >= g.darts()) throw DomainError("choose_rays: start dart out of range");
  if (start_dart >= 0)
    base_face = g.face_of(start_dart);
  else if (base_face < 0)
    base_face = default_base_face(g);
  if (base_face >= g.face_count()) throw DomainError("choose_rays: base face out of range");
  const int c0 = start_dart >= 0 ? start_dart : g.face_darts(base_face).front();
  const int nG = g.darts();

  RaySystem rs;
  rs.graph = g;
  rs.base_face = base_face;
  rs.start_dart = c0;

  std::vector<char> visited(g.vertex_count(), 0);
  std::vector<char> is_ray;
  // K dart -> G edge, kept current through surgery (new segment darts inherit the edge)
  std::vector<int> k_edge_of(nG);
  for (int x = 0; x < nG; ++x) k_edge_of[x] = g.edge_of(x);

  // initialization: the vertices of the base face, counterclockwise as seen from b
  std::vector<int> targets;
  {
    int x = c0;
    do {
      if (!visited[g.vertex_of(x)]) {
        visited[g.vertex_of(x)] = 1;
        targets.push_back(x);
      }
      x = phi_inv(g, x);
    } while (x != c0);
  }
  PlanarMap K = add_leaf(g, targets[0]);
  const int m1 = K.darts() - 1;
  k_edge_of.push_back(-1);
  k_edge_of.push_back(-1);
  for (std::size_t t = 1; t < targets.size(); ++t) {
    K = insert_edge_in_face(K, m1, targets[t]);
    k_edge_of.push_back(-1);
    k_edge_of.push_back(-1);
  }

  // induction along the dual spanning tree
  const DualTree tree = dual_tree(g, base_face);
  while (std::find(visited.begin(), visited.end(), 0) != visited.end()) {
    std::vector<int> cand;
    for (int f = 0; f < g.face_count(); ++f) {
      bool open = false;
      for (int x : g.face_darts(f))
        if (!visited[g.vertex_of(x)]) open = true;
      if (open) cand.push_back(f);
    }
    std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) { return tree.depth[a] < tree.depth[b]; });
    bool placed = false;
    for (int f : cand) {
      std::vector<int> path_edges;
      for (int z : tree_path(g, tree, f)) path_edges.push_back(g.edge_of(z));
      auto route = find_route(K, nG, k_edge_of, m1, path_edges, visited, g);
      if (!route || route->target < 0) continue;
      int cur = route->start_corner;
      for (int w : route->crossings) {
        int e = k_edge_of[w];
        K = subdivide_edge(K, w);
        const int p = K.darts() - 2, q = K.darts() - 1;
        k_edge_of.push_back(e);
        k_edge_of.push_back(e);
        K = insert_edge_in_face(K, cur, q);
        k_edge_of.push_back(-1);
        k_edge_of.push_back(-1);
        cur = p;
      }
      K = insert_edge_in_face(K, cur, route->target);
      k_edge_of.push_back(-1);
      k_edge_of.push_back(-1);
      visited[g.vertex_of(route->target)] = 1;
      placed = true;
      break;
    }
    if (!placed) throw DomainError("choose_rays: greedy ray construction failed");
  }

  // annotate K
  const int nK = K.darts();
  rs.k_edge.assign(nK, -1);
  rs.k_segment.assign(nK, -1);
  rs.k_ray.assign(nK, -1);
  rs.segments.assign(g.edge_count(), 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    int s = g.edge_dart(e), seg = 0;
    while (true) {
      rs.k_edge[s] = rs.k_edge[K.opp(s)] = e;
      rs.k_segment[s] = rs.k_segment[K.opp(s)] = seg;
      int y = K.opp(s);
      if (y < nG) break;
      s = K.nxt(K.nxt(y));
      ++seg;
    }
    rs.segments[e] = seg + 1;
  }
  rs.base_dart = m1;
  int c = m1;
  do {
    const int i = rs.ray_count();
    rs.b_dart.push_back(c);
    rs.crossed.emplace_back();
    rs.crossing_vertex_dart.emplace_back();
    int s = c;
    while (true) {
      rs.k_ray[s] = rs.k_ray[K.opp(s)] = i;
      int y = K.opp(s);
      int z = K.nxt(y);
      if (z < nG) {
        rs.end_dart.push_back(y);
        rs.corner.push_back(z);
        rs.vertex.push_back(g.vertex_of(z));
        break;
      }
      rs.crossing_vertex_dart[i].push_back(y);
      rs.crossed[i].push_back(rs.k_edge[z]);
      s = K.nxt(K.nxt(y));
    }
    c = K.nxt(c);
  } while (c != m1);
  rs.K = std::move(K);
  return rs;
}

EdgeLabeling label_preimages(const RaySystem& rs) {
  const PlanarMap& g = rs.graph;
  const PlanarMap& K = rs.K;
  EdgeLabeling lab;
  lab.label.assign(g.edge_count(), -1);
  lab.edge_of.assign(g.edge_count() + 2, -1);
  std::vector<int> rank(g.vertex_count());
  for (int i = 0; i < rs.ray_count(); ++i) rank[rs.vertex[i]] = i;
  int next = 2;
  for (int i = 0; i < rs.ray_count(); ++i) {
    const int v = rs.vertex[i];
    // darts at v counterclockwise, starting after the ray
    std::vector<int> around;
    for (int y = K.nxt(rs.end_dart[i]); y != rs.end_dart[i]; y = K.nxt(y)) around.push_back(y);
    while (true) {
      int w = -1;
      for (int y : around) {
        if (lab.label[g.edge_of(y)] >= 0) continue;
        int u = g.vertex_of(g.opp(y));
        if (w < 0 || rank[u] < rank[w]) w = u;
      }
      if (w < 0) break;
      for (int y : around)
        if (lab.label[g.edge_of(y)] < 0 && g.vertex_of(g.opp(y)) == w) {
          lab.label[g.edge_of(y)] = next;
          lab.edge_of[next] = g.edge_of(y);
          ++next;
        }
    }
    (void)v;
  }
  return lab;
}

std::vector<Crossing> loop_crossings(const RaySystem& rs, const EdgeLabeling& lab, int i) {
  const PlanarMap& K = rs.K;
  std::vector<Crossing> out;
  auto add = [&](int dart) { out.push_back({lab.label[rs.k_edge[dart]], rs.k_segment[dart]}); };
  for (int rin : rs.crossing_vertex_dart[i]) add(K.nxt(rin));
  for (int y = K.nxt(rs.end_dart[i]); y != rs.end_dart[i]; y = K.nxt(y)) add(y);
  const auto& xs = rs.crossing_vertex_dart[i];
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) add(K.prv(*it));
  return out;
}

std::vector<Perm> monodromy(const RaySystem& rs, const EdgeLabeling& lab) {
  const int d = lab.degree();
  std::vector<Perm> out;
  for (int i = 0; i < rs.ray_count(); ++i) {
    auto cr = loop_crossings(rs, lab, i);
    std::vector<int> img(d);
    for (int j = 1; j <= d; ++j) {
      int s = j;
      for (const auto& c : cr) {
        if (s == 1)
          s = c.label;
        else if (s == c.label)
          s = 1;
      }
      img[j - 1] = s - 1;
    }
    out.emplace_back(img);
  }
  return out;
}

std::optional<std::vector<Perm>> base_face_monodromy(const RaySystem& rs, const EdgeLabeling& lab) {
  for (const auto& c : rs.crossed)
    if (!c.empty()) return std::nullopt;
  const int d = lab.degree();
  std::vector<Perm> out;
  for (int i = 0; i < rs.ray_count(); ++i) {
    std::vector<int> cyc{1};
    for (int y = rs.K.nxt(rs.end_dart[i]); y != rs.end_dart[i]; y = rs.K.nxt(y))
      cyc.push_back(lab.label[rs.k_edge[y]]);
    out.push_back(Perm::from_cycles(d, {cyc}));
  }
  return out;
}

namespace {

// x_m (1-based): the loop crossing ray m from its right side to its left side
struct Reader {
  int n;
  std::vector<Word> x;  // x[m], m = 1..n
  explicit Reader(int n_) : n(n_), x(n_ + 1, Word(n_)) {
    Word q(n);  // Q_{m-1} = g_1 ... g_{m-1}
    for (int m = 1; m <= n; ++m) {
      x[m] = (q * Word::gen(n, m, -1) * q.inverse()).reduced();
      q = q * Word::gen(n, m);
    }
  }
  Word letter(int m, int e) const { return e > 0 ? x[m] : x[m].inverse(); }
  // path from the base sector (just clockwise of ray 1) to the sector clockwise of ray k
  Word tail(int k) const {
    Word w(n);
    for (int m = 1; m < k; ++m) w = w * x[m];
    return w;
  }
};

struct SegmentData {
  // per G edge: crossing between segment t and t+1 -> (ray 1-based, exponent when moving t -> t+1)
  std::vector<std::vector<std::pair<int, int>>> cross;
};

SegmentData segment_data(const RaySystem& rs) {
  SegmentData sd;
  sd.cross.resize(rs.graph.edge_count());
  for (int e = 0; e < rs.graph.edge_count(); ++e) sd.cross[e].assign(std::max(0, rs.segments[e] - 1), {0, 0});
  for (int i = 0; i < rs.ray_count(); ++i)
    for (int rin : rs.crossing_vertex_dart[i]) {
      int g1 = rs.K.nxt(rin), g2 = rs.K.prv(rin);
      int e = rs.k_edge[g1];
      int s1 = rs.k_segment[g1], s2 = rs.k_segment[g2];
      int t = std::min(s1, s2);
      sd.cross[e][t] = {i + 1, s1 < s2 ? 1 : -1};
    }
  return sd;
}

Word slide(const Reader& rd, const SegmentData& sd, int e, int a, int b) {
  Word w(rd.n);
  if (a < b)
    for (int t = a; t < b; ++t) w = w * rd.letter(sd.cross[e][t].first, sd.cross[e][t].second);
  else
    for (int t = a - 1; t >= b; --t) w = w * rd.letter(sd.cross[e][t].first, -sd.cross[e][t].second);
  return w;
}

}  // namespace

Word read_generator_loop(const RaySystem& rs, int i) {
  Reader rd(rs.ray_count());
  return (rd.tail(i + 1) * rd.tail(i + 2).inverse()).reduced();
}

WreathRecursion wreath_recursion(const RaySystem& rs, const EdgeLabeling& lab) {
  const PlanarMap& g = rs.graph;
  const int n = rs.ray_count();
  const int d = lab.degree();
  Reader rd(n);
  SegmentData sd = segment_data(rs);
  std::vector<int> rank(g.vertex_count());
  for (int i = 0; i < n; ++i) rank[rs.vertex[i]] = i;
  // for sheet j >= 2: the 1-based index of the higher endpoint of e_j, and the segment next to it
  std::vector<int> top(d + 1, 0), pos(d + 1, 0);
  for (int j = 2; j <= d; ++j) {
    int e = lab.edge_of[j];
    int x = g.edge_dart(e);
    int a = g.vertex_of(x), b = g.vertex_of(g.opp(x));
    int hi = rank[a] > rank[b] ? a : b;
    top[j] = rank[hi] + 1;
    pos[j] = hi == a ? 0 : rs.segments[e] - 1;
  }
  WreathRecursion rec;
  rec.n = n;
  rec.d = d;
  for (int i = 0; i < n; ++i) {
    const int I = i + 1;
    auto cr = loop_crossings(rs, lab, i);
    WreathElement el;
    std::vector<int> img(d);
    for (int j = 1; j <= d; ++j) {
      Word w = j == 1 ? rd.tail(I) : rd.tail(top[j]);
      int cur = j, at = j == 1 ? 0 : pos[j];
      for (const auto& c : cr) {
        if (cur == 1) {
          cur = c.label;
          at = c.segment;
        } else if (cur == c.label) {
          w = w * slide(rd, sd, lab.edge_of[cur], at, c.segment);
          cur = 1;
        }
      }
      if (cur == 1) {
        w = w * rd.tail(I + 1).inverse();
      } else {
        w = w * slide(rd, sd, lab.edge_of[cur], at, pos[cur]);
        w = w * rd.tail(top[cur]).inverse();
      }
      img[j - 1] = cur - 1;
      el.words.push_back(w.reduced());
    }
    el.perm = Perm(img);
    rec.entries.push_back(std::move(el));
  }
  return rec;
}

WreathRecursion wreath_recursion(const PlanarMap& g) {
  RaySystem rs = choose_rays(g);
  return wreath_recursion(rs, label_preimages(rs));
}

std::string WreathRecursion::to_string(const std::string& alphabet) const {
  std::string s;
  for (int i = 0; i < n; ++i) {
    std::string gname = alphabet.empty() ? "g" + std::to_string(i + 1) : std::string(1, alphabet[i]);
    s += "Phi(" + gname + ") = " + entries[i].to_string(alphabet) + "\n";
  }
  return s;
}

WreathElement recursion_product(const WreathRecursion& rec) {
  WreathElement acc = WreathElement::identity(rec.d, rec.n);
  for (const auto& e : rec.entries) acc = wreath_multiply(acc, e);
  return acc;
}

bool product_is_trivial(const WreathRecursion& rec) {
  WreathElement p = recursion_product(rec);
  if (!p.perm.is_identity()) return false;
  for (const auto& w : p.words)
    if (!word_normalize(w, true).empty()) return false;
  return true;
}

std::vector<std::string> shortcut_violations(const RaySystem& rs, const EdgeLabeling& lab,
                                             const WreathRecursion& rec) {
  const PlanarMap& g = rs.graph;
  std::vector<std::string> out;
  std::vector<int> rank(g.vertex_count());
  for (int i = 0; i < rs.ray_count(); ++i) rank[rs.vertex[i]] = i;
  auto ends = [&](int j) {
    int x = g.edge_dart(lab.edge_of[j]);
    return std::pair<int, int>{g.vertex_of(x), g.vertex_of(g.opp(x))};
  };
  for (int i = 0; i < rec.n; ++i) {
    const auto& el = rec.entries[i];
    for (int j = 1; j <= rec.d; ++j) {
      int jj = el.perm.image1(j);
      bool trivial = el.words[j - 1].empty();
      std::string where = "g" + std::to_string(i + 1) + "|" + std::to_string(j);
      if (jj == j) {
        if (!trivial) out.push_back(where + ": fixed sheet with nontrivial word");
        continue;
      }
      if (j == 1 || jj == 1) continue;
      auto [a1, b1] = ends(j);
      auto [a2, b2] = ends(jj);
      std::set<int> s1{a1, b1}, s2{a2, b2};
      if (s1 == s2) continue;
      std::set<int> all{a1, b1, a2, b2};
      int hi = *std::max_element(all.begin(), all.end(), [&](int a, int b) { return rank[a] < rank[b]; });
      if (rank[hi] == i && !trivial) out.push_back(where + ": highest-endpoint rule with nontrivial word");
    }
  }
  return out;
}

int invariant_curve_degree(const PlanarMap& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
    throw DomainError("invariant_curve_degree: vertex out of range");
  WeightedSimpleGraph s = to_simple(g);
  if (s.weight(u, v) == 0) throw DomainError("invariant_curve_degree: vertices are not adjacent");
  int total = 0;
  for (const auto& e : s.edges) {
    bool same = (e.u == std::min(u, v) && e.v == std::max(u, v));
    if (same) continue;
    if (e.u == u || e.v == u || e.u == v || e.v == v) total += 1 + e.weight;
  }
  return total;
}

bool is_rational(const PlanarMap& g) { return g.connected(); }

}  // namespace critfix
