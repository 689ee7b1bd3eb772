#include "iplab/ordered_graph.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "iplab/check.hpp"

using namespace iplab;

namespace {

// Reference crossing enumeration: quadratic scan over all edge pairs.
std::set<std::pair<Edge, Edge>> brute_crossings(const std::vector<Edge>& f) {
  std::set<std::pair<Edge, Edge>> out;
  for (size_t i = 0; i < f.size(); ++i) {
    for (size_t j = i + 1; j < f.size(); ++j) {
      auto [a, b] = f[i];
      auto [c, d] = f[j];
      if (a > c) {
        std::swap(a, c);
        std::swap(b, d);
      }
      if (a < c && c < b && b < d) out.insert({{a, b}, {c, d}});
    }
  }
  return out;
}

// Reference gap: try every sub-interval, keep the leftmost largest one that
// avoids N(u).
GapResult brute_gap(const OrderedGraph& g, Vertex u, Interval iv) {
  GapResult best;
  bool found = false;
  for (Vertex a = iv.lo; a <= iv.hi; ++a) {
    for (Vertex b = a; b <= iv.hi; ++b) {
      bool clean = true;
      for (Vertex w = a; w <= b && clean; ++w) {
        clean = !g.has_edge(u, w);
      }
      if (!clean) continue;
      int h = b - a;
      if (!found || h > best.gap) {
        best.gap = h;
        best.witness = Interval{a, b};
        found = true;
      }
    }
  }
  return best;
}

// Reference shortest increasing walk length via BFS on the u < v orientation.
std::optional<int> brute_spi_size(const OrderedGraph& g, Vertex s, Vertex t) {
  std::vector<int> dist(static_cast<size_t>(g.vertex_count()) + 1, -1);
  dist[static_cast<size_t>(s)] = 1;
  std::vector<Vertex> frontier{s};
  while (!frontier.empty()) {
    std::vector<Vertex> next;
    for (Vertex v : frontier) {
      for (Vertex w : g.neighbors(v)) {
        if (w > v && dist[static_cast<size_t>(w)] < 0) {
          dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
          next.push_back(w);
        }
      }
    }
    frontier = std::move(next);
  }
  if (dist[static_cast<size_t>(t)] < 0) return std::nullopt;
  return dist[static_cast<size_t>(t)];
}

OrderedGraph random_graph(int n, int pct, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> e;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      if (static_cast<int>(rng() % 100) < pct) e.emplace_back(u, v);
    }
  }
  return OrderedGraph(n, std::move(e));
}

}  // namespace

TEST_CASE("construction normalizes and validates") {
  OrderedGraph g(4, {{3, 1}, {2, 4}});
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 2);
  CHECK(g.edges() == std::vector<Edge>{{1, 3}, {2, 4}});
  CHECK(g.has_edge(1, 3));
  CHECK(g.has_edge(3, 1));
  CHECK_FALSE(g.has_edge(1, 2));
  CHECK(g.edge_index(2, 4) == 1);
  CHECK(g.edge_index(1, 4) == -1);
  CHECK_FALSE(g.has_increasing_ham_path());

  CHECK_THROWS_AS(OrderedGraph(3, {{2, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(OrderedGraph(3, {{1, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(OrderedGraph(3, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(OrderedGraph(3, {{1, 2}, {2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(OrderedGraph(0, {}), std::invalid_argument);
}

TEST_CASE("spine has the increasing Hamiltonian path") {
  auto g = OrderedGraph::spine(5);
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 4);
  CHECK(g.has_increasing_ham_path());
  CHECK(g.neighbors(3) == std::vector<Vertex>{2, 4});

  OrderedGraph broken(4, {{1, 2}, {3, 4}});
  CHECK_FALSE(broken.has_increasing_ham_path());
}

TEST_CASE("crossing detection matches the pairwise scan") {
  OrderedGraph g(4, {{1, 3}, {2, 4}});
  auto pairs = crossing_pairs(g, g.edges());
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].first == Edge{1, 3});
  CHECK(pairs[0].second == Edge{2, 4});
  CHECK(find_crossing(g.edges()).has_value());

  OrderedGraph nested(4, {{1, 4}, {2, 3}});
  CHECK(crossing_pairs(nested, nested.edges()).empty());
  CHECK_FALSE(find_crossing(nested.edges()).has_value());

  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto r = random_graph(3 + static_cast<int>(seed % 10), 40, seed);
    auto got = crossing_pairs(r, r.edges());
    std::set<std::pair<Edge, Edge>> got_set(got.begin(), got.end());
    CHECK(got.size() == got_set.size());
    CHECK(got_set == brute_crossings(r.edges()));
    CHECK(find_crossing(r.edges()).has_value() == !got_set.empty());
  }
}

TEST_CASE("crossing_pairs rejects edges outside the graph") {
  OrderedGraph g(4, {{1, 3}});
  CHECK_THROWS_AS(crossing_pairs(g, {{2, 4}}), std::invalid_argument);
}

TEST_CASE("gap finds the leftmost largest free run") {
  // Probe at 15 touching 7 and 12 leaves [5,6], [8,11], [13,14] free.
  OrderedGraph g(15, {{7, 15}, {12, 15}});
  auto r = gap(g, 15, {5, 14});
  CHECK(r.gap == 3);
  REQUIRE(r.witness.has_value());
  CHECK(*r.witness == Interval{8, 11});

  auto all_free = gap(g, 15, {1, 6});
  CHECK(all_free.gap == 5);
  CHECK(*all_free.witness == Interval{1, 6});

  OrderedGraph dense(4, {{1, 2}, {1, 3}, {1, 4}});
  auto hit = gap(dense, 1, {2, 4});
  CHECK(hit.gap == 0);
  CHECK_FALSE(hit.witness.has_value());

  CHECK_THROWS_AS(gap(g, 8, {5, 14}), std::invalid_argument);
}

TEST_CASE("gap agrees with the exhaustive scan") {
  for (std::uint64_t seed = 50; seed < 80; ++seed) {
    int n = 6 + static_cast<int>(seed % 7);
    auto g = random_graph(n, 30, seed);
    for (Vertex u = 1; u <= n; ++u) {
      for (Vertex lo = 1; lo <= n; ++lo) {
        for (Vertex hi = lo; hi <= n; ++hi) {
          if (lo <= u && u <= hi) continue;
          auto fast = gap(g, u, {lo, hi});
          auto slow = brute_gap(g, u, {lo, hi});
          CHECK(fast.gap == slow.gap);
          CHECK(fast.witness == slow.witness);
        }
      }
    }
  }
}

TEST_CASE("interval neighbor helpers") {
  OrderedGraph g(10, {{2, 5}, {2, 8}, {4, 9}});
  CHECK(adjacent_to_interval(g, 2, {5, 7}));
  CHECK_FALSE(adjacent_to_interval(g, 2, {6, 7}));
  CHECK(last_neighbor_below(g, 2, 9) == 8);
  CHECK(last_neighbor_below(g, 2, 8) == 5);
  CHECK(last_neighbor_below(g, 2, 5) == 0);
  CHECK(first_neighbor_above(g, 2, 4) == 5);
  CHECK(first_neighbor_above(g, 2, 5) == 8);
  CHECK(first_neighbor_above(g, 2, 8) == 0);
  CHECK(first_neighbor_above(g, 9, 3) == 4);
}

TEST_CASE("split_interval spreads the remainder left") {
  auto parts = split_interval({1, 10}, 3);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == Interval{1, 4});
  CHECK(parts[1] == Interval{5, 7});
  CHECK(parts[2] == Interval{8, 10});

  auto exact = split_interval({5, 14}, 5);
  for (int i = 0; i < 5; ++i) CHECK(exact[static_cast<size_t>(i)].size() == 2);

  auto singles = split_interval({1, 3}, 3);
  CHECK(singles[2] == Interval{3, 3});

  CHECK_THROWS_AS(split_interval({1, 3}, 0), std::invalid_argument);
  CHECK_THROWS_AS(split_interval({1, 3}, 4), std::invalid_argument);
}

TEST_CASE("quotient contracts parts and keeps inter-part edges") {
  OrderedGraph g(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 3}, {2, 5}, {4, 6}});
  auto q = quotient(g, {{1, 2}, {3, 3}, {4, 6}});
  CHECK(q.vertex_count() == 3);
  CHECK(q.edges() == std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(q.has_increasing_ham_path());

  CHECK_THROWS_AS(quotient(g, {{1, 2}, {4, 6}}), std::invalid_argument);
  CHECK_THROWS_AS(quotient(g, {{1, 6}, {1, 6}}), std::invalid_argument);
}

TEST_CASE("cutwidth counts the busiest cut") {
  CHECK(cutwidth(1, {}) == 0);
  CHECK(cutwidth(OrderedGraph::spine(6)) == 1);

  // K4 loads the middle cut with all four spanning edges.
  OrderedGraph k4(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(cutwidth(k4) == 4);

  CHECK(cutwidth(5, {{1, 5}, {2, 4}}) == 2);
  CHECK_THROWS_AS(cutwidth(3, {{1, 4}}), std::invalid_argument);
}

TEST_CASE("increasing path sequences are exactly cutwidth one") {
  OrderedGraph g(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 4}, {2, 6}});
  CHECK(is_seq_of_increasing_paths(g, {{1, 2}, {2, 3}}));
  CHECK(is_seq_of_increasing_paths(g, {{1, 2}, {4, 5}}));
  CHECK(is_seq_of_increasing_paths(g, {}));
  CHECK(is_seq_of_increasing_paths(g, {{1, 4}, {4, 5}, {5, 6}}));
  CHECK_FALSE(is_seq_of_increasing_paths(g, {{1, 4}, {2, 3}}));
  CHECK_FALSE(is_seq_of_increasing_paths(g, {{1, 4}, {2, 6}}));
  CHECK_THROWS_AS(is_seq_of_increasing_paths(g, {{1, 3}}), std::invalid_argument);
}

TEST_CASE("shortest increasing path is induced and minimal") {
  auto p8 = OrderedGraph::spine(8);
  auto full = shortest_increasing_path(p8, 1, 8);
  REQUIRE(full.has_value());
  CHECK(full->size() == 8);
  CHECK(verify_induced_increasing(p8, *full));

  OrderedGraph shortcut(8, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {1, 8}});
  auto hop = shortest_increasing_path(shortcut, 1, 8);
  REQUIRE(hop.has_value());
  CHECK(hop->seq == std::vector<Vertex>{1, 8});

  OrderedGraph split(4, {{1, 2}, {3, 4}});
  CHECK_FALSE(shortest_increasing_path(split, 1, 4).has_value());
  CHECK_THROWS_AS(shortest_increasing_path(split, 3, 3), std::invalid_argument);
  CHECK_THROWS_AS(shortest_increasing_path(split, 4, 1), std::invalid_argument);

  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    int n = 5 + static_cast<int>(seed % 8);
    auto g = random_graph(n, 35, seed);
    for (Vertex s = 1; s <= n; ++s) {
      for (Vertex t = s + 1; t <= n; ++t) {
        auto fast = shortest_increasing_path(g, s, t);
        auto slow = brute_spi_size(g, s, t);
        CHECK(fast.has_value() == slow.has_value());
        if (fast && slow) {
          CHECK(fast->size() == *slow);
          CHECK(fast->seq.front() == s);
          CHECK(fast->seq.back() == t);
          CHECK(verify_induced_increasing(g, *fast));
        }
      }
    }
  }
}

TEST_CASE("verify_induced_increasing rejects chords and disorder") {
  OrderedGraph g(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}});
  CHECK(verify_induced_increasing(g, {{2, 3, 4, 5}}));
  CHECK(verify_induced_increasing(g, {{3}}));
  CHECK_FALSE(verify_induced_increasing(g, {{1, 2, 3}}));  // chord (1,3)
  CHECK_FALSE(verify_induced_increasing(g, {{3, 2}}));
  CHECK_FALSE(verify_induced_increasing(g, {{2, 4}}));  // not adjacent
  CHECK_FALSE(verify_induced_increasing(g, {{}}));
  CHECK_FALSE(verify_induced_increasing(g, {{0, 1}}));
  CHECK_FALSE(verify_induced_increasing(g, {{5, 6}}));
}

TEST_CASE("induced_subgraph re-indexes from one") {
  OrderedGraph g(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 3}, {2, 5}, {4, 6}});
  auto sub = induced_subgraph(g, {2, 5});
  CHECK(sub.vertex_count() == 4);
  CHECK(sub.edges() == std::vector<Edge>{{1, 2}, {1, 4}, {2, 3}, {3, 4}});
  CHECK(sub.has_increasing_ham_path());

  auto single = induced_subgraph(g, {3, 3});
  CHECK(single.vertex_count() == 1);
  CHECK(single.edge_count() == 0);
}

TEST_CASE("assertion failures raise InvariantViolation") {
  bool raised = false;
  try {
    IPLAB_ASSERT(false, "forced");
  } catch (const InvariantViolation&) {
    raised = true;
  }
  CHECK(raised);
}
