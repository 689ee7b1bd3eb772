#include "iplab/noncross.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "iplab/extremal.hpp"

using namespace iplab;

namespace {

OrderedGraph complete(int n) {
  std::vector<Edge> e;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) e.emplace_back(u, v);
  }
  return OrderedGraph(n, std::move(e));
}

}  // namespace

TEST_CASE("conflict graph joins exactly the crossing edges") {
  OrderedGraph g(6, {{1, 3}, {2, 4}, {2, 5}, {4, 6}, {1, 6}});
  auto cg = build_conflict_graph(g);
  CHECK(cg.nodes == g.edge_count());
  CHECK(cg.arcs.size() == crossing_pairs(g, g.edges()).size());
  for (auto [a, b] : cg.arcs) {
    const Edge& ea = g.edges()[static_cast<size_t>(a)];
    const Edge& eb = g.edges()[static_cast<size_t>(b)];
    CHECK((ea.first < eb.first && eb.first < ea.second && ea.second < eb.second));
  }
  // (1,6) nests over everything; (1,3)x(2,4), (1,3)x(2,5), (2,5)x(4,6).
  CHECK(cg.arcs.size() == 3);
  int isolated = g.edge_index(1, 6);
  CHECK(cg.degree(isolated) == 0);
}

TEST_CASE("two_partition splits a single crossing deterministically") {
  OrderedGraph g(4, {{1, 3}, {2, 4}});
  auto c = two_partition(g);
  CHECK(c.k == 2);
  CHECK(c.color_of(g, 1, 3) == 1);
  CHECK(c.color_of(g, 2, 4) == 2);
  CHECK(verify_partition(g, c));
  CHECK_FALSE(first_class_crossing(g, c).has_value());
}

TEST_CASE("two_partition handles crossing-free and generated inputs") {
  OrderedGraph nested(6, {{1, 6}, {2, 5}, {3, 4}, {1, 2}});
  auto c = two_partition(nested);
  CHECK(c.k == 2);
  CHECK(std::count(c.color.begin(), c.color.end(), 1) == 4);

  auto u4 = build_u(4);
  auto cu = two_partition(u4.graph);
  CHECK(verify_partition(u4.graph, cu));
}

TEST_CASE("complete graph on five positions has no two-class split") {
  auto k5 = complete(5);

  // Exhaustive ground truth: no assignment of the ten edges to two classes
  // leaves both classes crossing-free.
  auto crossings = crossing_pairs(k5, k5.edges());
  REQUIRE(crossings.size() == 5);
  bool any_valid = false;
  for (int mask = 0; mask < (1 << 10) && !any_valid; ++mask) {
    bool ok = true;
    for (const auto& [e1, e2] : crossings) {
      int i = k5.edge_index(e1.first, e1.second);
      int j = k5.edge_index(e2.first, e2.second);
      if (((mask >> i) & 1) == ((mask >> j) & 1)) {
        ok = false;
        break;
      }
    }
    any_valid = ok;
  }
  CHECK_FALSE(any_valid);

  bool thrown = false;
  try {
    two_partition(k5);
  } catch (const NotTwoPartitionable& e) {
    thrown = true;
    CHECK(e.odd_cycle.size() >= 3);
    CHECK(e.odd_cycle.size() % 2 == 1);
    // Consecutive cycle members must actually cross.
    for (size_t i = 0; i < e.odd_cycle.size(); ++i) {
      Edge a = e.odd_cycle[i];
      Edge b = e.odd_cycle[(i + 1) % e.odd_cycle.size()];
      if (a.first > b.first) std::swap(a, b);
      CHECK((a.first < b.first && b.first < a.second && a.second < b.second));
    }
  }
  CHECK(thrown);
}

TEST_CASE("k_partition exact mode answers small instances") {
  auto k5 = complete(5);
  CHECK_FALSE(k_partition(k5, 2).has_value());

  auto three = k_partition(k5, 3);
  REQUIRE(three.has_value());
  CHECK(three->method == PartitionMethod::kExact);
  CHECK(three->coloring.k == 3);
  CHECK(verify_partition(k5, three->coloring));

  // Crossing-free input: everything stays in class 1.
  OrderedGraph plain(5, {{1, 2}, {2, 3}, {1, 5}});
  auto one = k_partition(plain, 1);
  REQUIRE(one.has_value());
  CHECK(std::count(one->coloring.color.begin(), one->coloring.color.end(), 1) == 3);

  CHECK_THROWS_AS(k_partition(k5, 0), std::invalid_argument);
}

TEST_CASE("k_partition greedy mode still verifies") {
  // Force the greedy path by setting the exact threshold to zero.
  auto [g, cert] = random_two_nc(40, 120, 11);
  auto res = k_partition(g, 2, 0);
  if (res.has_value()) {
    CHECK(res->method == PartitionMethod::kGreedy);
    CHECK(verify_partition(g, res->coloring));
  }
  // The instance is 2-non-crossing by construction, so four classes must fit
  // even first-fit.
  auto wide = k_partition(g, 4, 0);
  REQUIRE(wide.has_value());
  CHECK(verify_partition(g, wide->coloring));
}

TEST_CASE("verify_partition rejects malformed certificates") {
  OrderedGraph g(4, {{1, 3}, {2, 4}});
  CHECK_FALSE(verify_partition(g, EdgeColoring{0, {}}));
  CHECK_FALSE(verify_partition(g, EdgeColoring{2, {1}}));
  CHECK_FALSE(verify_partition(g, EdgeColoring{2, {1, 3}}));
  CHECK_FALSE(verify_partition(g, EdgeColoring{2, {0, 1}}));
  CHECK_FALSE(verify_partition(g, EdgeColoring{2, {1, 1}}));
  CHECK(verify_partition(g, EdgeColoring{2, {2, 1}}));
}

TEST_CASE("first_class_crossing names the offending class") {
  // Only (2,4) and (3,5) cross; (1,6) nests over both.
  OrderedGraph g(6, {{1, 6}, {2, 4}, {3, 5}});
  EdgeColoring bad{2, {1, 2, 2}};
  int cls = 0;
  auto hit = first_class_crossing(g, bad, &cls);
  REQUIRE(hit.has_value());
  CHECK(cls == 2);
  CHECK(hit->first == Edge{2, 4});
  CHECK(hit->second == Edge{3, 5});

  EdgeColoring good{2, {2, 1, 2}};
  CHECK_FALSE(first_class_crossing(g, good, &cls).has_value());

  EdgeColoring mono{1, {1, 1, 1}};
  auto again = first_class_crossing(g, mono, &cls);
  REQUIRE(again.has_value());
  CHECK(cls == 1);
}

TEST_CASE("coloring helpers expose classes and lookups") {
  // edges() sorts to (1,2),(1,3),(2,4).
  OrderedGraph g(4, {{1, 3}, {2, 4}, {1, 2}});
  EdgeColoring c{2, {1, 2, 1}};
  CHECK(c.color_of(g, 1, 2) == 1);
  CHECK(c.color_of(g, 1, 3) == 2);
  CHECK_THROWS_AS(c.color_of(g, 3, 4), std::invalid_argument);
  auto cls = c.classes(g);
  REQUIRE(cls.size() == 2);
  CHECK(cls[0] == std::vector<Edge>{{1, 2}, {2, 4}});
  CHECK(cls[1] == std::vector<Edge>{{1, 3}});
}
