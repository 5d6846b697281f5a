#include <map>
#include <random>

#include "critfix/partitions.hpp"
#include "critfix/realize.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace critfix;

namespace {

std::map<int, int> valences_by_vertex(const PlanarMap& g) {
  std::map<int, int> m;
  for (int v = 0; v < g.vertex_count(); ++v) m[v] = g.valence(v);
  return m;
}

int vertex_with_valence(const PlanarMap& g, int k) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.valence(v) == k) return v;
  return -1;
}

// vertex ids are recomputed by the map; follow an anchor dart instead
int valence_at(const PlanarMap& g, int dart) { return g.valence(g.vertex_of(dart)); }

}  // namespace

TEST_CASE("base examples") {
  auto path = realize_connected({2, 1, 1}, 3);
  CHECK(valence_partition(path) == Partition{2, 1, 1});
  CHECK(path.edge_count() == 2);
  auto bigon = realize_connected({2, 2}, 3);
  CHECK(bigon.vertex_count() == 2);
  CHECK(to_simple(bigon).edges.front().weight == 2);

  auto four = realize_connected({4, 4}, 5);
  CHECK(four.vertex_count() == 2);
  CHECK(to_simple(four).edges.front().weight == 4);

  auto g = realize_connected({3, 3, 2, 1, 1}, 6);
  CHECK(validate(g).ok);
  CHECK(g.connected());
  CHECK(valence_partition(g) == Partition{3, 3, 2, 1, 1});

  CHECK_THROWS_AS(realize_connected({1, 1, 1, 1}, 3), DomainError);
  CHECK_THROWS_AS(realize_connected({4, 2}, 4), DomainError);
}

TEST_CASE("every admissible partition up to degree 8") {
  int count = 0;
  for (int d = 2; d <= 8; ++d)
    for (const auto& p : admissible_partitions(d)) {
      auto g = realize_connected(p, d);
      REQUIRE(validate(g).ok);
      CHECK(g.connected());
      CHECK(g.vertex_count() - g.edge_count() + g.face_count() == 2);
      CHECK(valence_partition(g) == p);
      auto again = realize_connected(p, d);
      CHECK(again == g);
      ++count;
    }
  CHECK(count > 100);
}

TEST_CASE("rows are honored in caller order") {
  std::vector<int> rows{1, 3, 2, 3, 1};
  Realization r = realize_connected_rows(rows, 6);
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(r.graph.valence(r.vertex_of_row(static_cast<int>(i))) == rows[i]);
}

TEST_CASE("buffer-vertex shift") {
  // path a-b-c with (v1, v2) = (b, a)
  auto path = path_graph(2);
  int b = vertex_with_valence(path, 2);
  int a = path.vertex_of(path.opp(path.vertex_darts(b)[0]));
  int anchor_a = path.vertex_darts(a)[0], anchor_b = path.vertex_darts(b)[0];
  auto r = shift_valence(path, b, a);
  CHECK(validate(r).ok);
  CHECK(r.connected());
  CHECK(valence_at(r, anchor_a) == 2);
  CHECK(valence_at(r, anchor_b) == 1);
  CHECK(valence_partition(r) == Partition{2, 1, 1});

  auto tri = fixtures::triangle();
  auto t = shift_valence(tri, 0, 1);
  CHECK(valence_partition(t) == Partition{3, 2, 1});
  CHECK(t.connected());

  int end = vertex_with_valence(path, 1);
  CHECK_THROWS_AS(shift_valence(path, end, b), DomainError);
}

TEST_CASE("pair increment") {
  auto path = path_graph(2);
  int mid = vertex_with_valence(path, 2);
  int e1 = path.vertex_of(path.opp(path.vertex_darts(mid)[0]));
  int e2 = path.vertex_of(path.opp(path.vertex_darts(mid)[1]));

  auto adj = increment_pair(path, mid, e1);
  CHECK(adj.edge_count() == 3);
  CHECK(to_simple(adj).edges.size() == 2);
  CHECK(valence_partition(adj) == Partition{3, 2, 1});

  auto far = increment_pair(path, e1, e2);
  CHECK(valence_partition(far) == Partition{2, 2, 2});
  CHECK(far.connected());
  CHECK(validate(far).ok);

  CHECK_THROWS_AS(increment_pair(path, mid, mid), DomainError);
}

TEST_CASE("surgery keeps connectivity and genus (sampled)") {
  std::mt19937 rng(23);
  int shifts = 0, pairs = 0;
  for (int d = 4; d <= 8; ++d)
    for (const auto& p : admissible_partitions(d)) {
      auto g = realize_connected(p, d);
      std::uniform_int_distribution<int> pick(0, g.vertex_count() - 1);
      for (int t = 0; t < 3; ++t) {
        int s = pick(rng), u = pick(rng);
        if (s == u) continue;
        auto before = valences_by_vertex(g);
        int as = g.vertex_darts(s)[0], au = g.vertex_darts(u)[0];
        auto h = increment_pair(g, s, u);
        REQUIRE(validate(h).ok);
        CHECK(h.connected());
        CHECK(h.vertex_count() == g.vertex_count());
        CHECK(h.edge_count() == g.edge_count() + 1);
        CHECK(valence_at(h, as) == before[s] + 1);
        CHECK(valence_at(h, au) == before[u] + 1);
        ++pairs;
      }
      for (int v1 = 0; v1 < g.vertex_count(); ++v1) {
        if (simple_degree(g, v1) < 2) continue;
        int v2 = g.vertex_of(g.opp(g.vertex_darts(v1)[0]));
        int a2 = g.vertex_darts(v2)[0];
        int w1 = g.valence(v1), w2 = g.valence(v2);
        auto h = shift_valence(g, v1, v2);
        REQUIRE(validate(h).ok);
        CHECK(h.connected());
        CHECK(h.vertex_count() == g.vertex_count());
        CHECK(h.edge_count() == g.edge_count());
        CHECK(valence_at(h, a2) == w2 + 1);
        Partition expect;
        for (int v = 0; v < g.vertex_count(); ++v) expect.push_back(v == v1 ? w1 - 1 : v == v2 ? w2 + 1 : g.valence(v));
        CHECK(valence_partition(h) == normalize_partition(expect));
        ++shifts;
        break;
      }
    }
  CHECK(shifts > 50);
  CHECK(pairs > 50);
}

TEST_CASE("general realization") {
  auto two = realize_general({1, 1, 1, 1}, 3);
  CHECK(two.component_count() == 2);
  CHECK(two.edge_count() == 2);
  CHECK(realize_general({1, 1}, 2).edge_count() == 1);
  for (int d = 2; d <= 8; ++d) {
    for (const auto& p : admissible_partitions(d)) CHECK(valence_partition(realize_general(p, d)) == p);
    // n > d is allowed here
    Partition ones(2 * d - 2, 1);
    auto g = realize_general(ones, d);
    CHECK(validate(g).ok);
    CHECK(valence_partition(g) == ones);
  }
  CHECK_THROWS_AS(realize_general({3, 1}, 3), DomainError);
}
