#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "iplab/noncross.hpp"
#include "iplab/ordered_graph.hpp"

namespace iplab {

enum class Family { kU, kG };

// Generated benchmark instance: the graph, a crossing-free class certificate,
// and for the two-parameter family the positions of the copy extremities.
struct LabeledInstance {
  Family family = Family::kU;
  int k = 0;  // first parameter (unused for the U family)
  int p = 0;
  OrderedGraph graph;
  EdgeColoring certificate;
  std::vector<Vertex> x_set;  // copy extremities, empty for base constructions
};

// End-to-start concatenation: B is shifted so its first vertex lands on A's
// last vertex; the result has |A| + |B| - 1 vertices.  Preserves the
// increasing Hamiltonian path when both sides have it.
OrderedGraph glue(const OrderedGraph& a, const OrderedGraph& b);

// Doubling family: level 0 is a single edge; level p+1 glues two copies of
// level p and adds the edge between the outer extremities.  2^p + 1 vertices,
// all edges fit in one crossing-free class.
LabeledInstance build_u(int p);

// Two-parameter family.  (k, 0) is the three-vertex path; (0, p) aliases
// build_u(p + 1); otherwise glue d copies of level (k, p-1) where d + 1
// matches the size of level (k-1, p), then connect the copy extremities
// {c_1, ..., c_{d+1}} with a complete bipartite graph from {c_1, c_{d+1}} to
// the interior extremities plus a copy of level (k-1, p) laid onto the c_i.
// The certificate uses at most 2k + 1 classes.
LabeledInstance build_g(int k, int p);

// Vertex count 2^C(k+p+1, p) + 1 predicted for build_g(k, p); throws when the
// exponent exceeds 62.
std::int64_t expected_size(int k, int p);

// Largest induced path size not excluded for the family member: 2p + 2 for
// build_u(p), 2k(p + 2) + 2 for build_g(k, p) with k >= 1.
int ip_upper_bound(Family family, int k, int p);

// Seeded corpus instance: the spine plus `chords` random attempts, each kept
// on the first of two pages that accepts it without a crossing.  The result
// always carries a valid two-class certificate (class 1 holds the spine).
// Identical arguments give identical instances.
std::pair<OrderedGraph, EdgeColoring> random_two_nc(int n, int chords,
                                                    std::uint64_t seed);

}  // namespace iplab
