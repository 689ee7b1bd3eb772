#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "iplab/ordered_graph.hpp"

namespace iplab {

// Assignment of a class in [1, k] to every edge, parallel to
// OrderedGraph::edges().  A valid certificate has every class crossing-free.
struct EdgeColoring {
  int k = 0;
  std::vector<int> color;  // color[i] is the class of edges()[i]

  int color_of(const OrderedGraph& g, Vertex u, Vertex v) const;
  std::vector<std::vector<Edge>> classes(const OrderedGraph& g) const;
};

// Nodes are edge indices of the host graph; an arc joins two edges iff they
// cross.  Node count equals the host edge count; arcs are undirected.
struct ConflictGraph {
  int nodes = 0;
  std::vector<std::pair<int, int>> arcs;
  std::vector<std::vector<int>> adj;

  int degree(int node) const { return static_cast<int>(adj[static_cast<size_t>(node)].size()); }
};

ConflictGraph build_conflict_graph(const OrderedGraph& g);

// Thrown when a 2-partition is requested but the conflict graph has an odd
// cycle; the cycle is reported as a list of host edges.
struct NotTwoPartitionable : std::runtime_error {
  std::vector<Edge> odd_cycle;
  explicit NotTwoPartitionable(std::vector<Edge> cycle)
      : std::runtime_error("edge set is not partitionable into two crossing-free classes"),
        odd_cycle(std::move(cycle)) {}
};

// Splits E(G) into two crossing-free classes by 2-coloring the conflict
// graph (BFS, component roots take class 1).  Throws NotTwoPartitionable
// when impossible.
EdgeColoring two_partition(const OrderedGraph& g);

enum class PartitionMethod { kExact, kGreedy };

struct KPartitionResult {
  EdgeColoring coloring;
  PartitionMethod method = PartitionMethod::kExact;
};

// Tries to split E(G) into k crossing-free classes.  Runs exact backtracking
// when at most exact_threshold edges have nonzero conflict degree, otherwise
// a greedy first-fit over edges ordered by (span descending, left endpoint
// ascending).  nullopt if the chosen strategy finds no partition (greedy
// failure does not certify infeasibility).
std::optional<KPartitionResult> k_partition(const OrderedGraph& g, int k,
                                            int exact_threshold = 64);

// True iff every edge carries a class in [1, k] and every class is
// crossing-free.  O(m log m) per class via the sweep check.
bool verify_partition(const OrderedGraph& g, const EdgeColoring& c);

// First crossing pair inside a class, for diagnostics; nullopt when the
// certificate is valid.  Reports the offending class via *out_class.
std::optional<std::pair<Edge, Edge>> first_class_crossing(const OrderedGraph& g,
                                                          const EdgeColoring& c,
                                                          int* out_class = nullptr);

}  // namespace iplab
