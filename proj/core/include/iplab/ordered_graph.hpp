#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "iplab/check.hpp"

namespace iplab {

// Vertices are the positions 1..n of a fixed linear order.  An edge is a
// normalized pair (u, v) with u < v.  The graph is simple.
using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Contiguous run of positions [lo, hi], never empty.  Use
// std::optional<Interval> where emptiness can occur.
struct Interval {
  Vertex lo = 1;
  Vertex hi = 1;

  int size() const { return hi - lo + 1; }
  bool contains(Vertex v) const { return lo <= v && v <= hi; }
  bool operator==(const Interval&) const = default;
};

// Vertex sequence of a path; seq holds positions in visit order.
struct VertexPath {
  std::vector<Vertex> seq;

  int size() const { return static_cast<int>(seq.size()); }
  bool empty() const { return seq.empty(); }
};

class OrderedGraph {
 public:
  OrderedGraph() = default;

  // Normalizes each pair to (min, max).  Throws std::invalid_argument on
  // self-loops, duplicates, or endpoints outside [1, n].
  OrderedGraph(int n, std::vector<Edge> edges);

  // The graph on [1, n] whose edges are exactly the consecutive pairs.
  static OrderedGraph spine(int n);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Lexicographically sorted edge list; edge indices refer to this order.
  const std::vector<Edge>& edges() const { return edges_; }

  // Ascending neighbor list of v.
  const std::vector<Vertex>& neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[static_cast<size_t>(v)];
  }

  bool has_edge(Vertex u, Vertex v) const;

  // Index of (u, v) in edges(), or -1.
  int edge_index(Vertex u, Vertex v) const;

  // True iff every consecutive pair (i, i+1) is an edge, so the identity
  // order itself traces a Hamiltonian path.
  bool has_increasing_ham_path() const { return ham_; }

  void check_vertex(Vertex v) const;

 private:
  int n_ = 0;
  bool ham_ = false;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

// Two edges (a,b), (c,d) cross iff a < c < b < d.  Returns every crossing
// pair of F, listed once with the lower left endpoint first; empty iff F is
// crossing-free.  F must be a subset of E(G).  Cost is output-sensitive:
// O(|F| log |F| + sum of spans).
std::vector<std::pair<Edge, Edge>> crossing_pairs(const OrderedGraph& g,
                                                  const std::vector<Edge>& f);

// One crossing pair of F, or nullopt if F is crossing-free.
// O(|F| log |F|) stack sweep; independent of crossing_pairs.
std::optional<std::pair<Edge, Edge>> find_crossing(std::vector<Edge> f);

struct GapResult {
  // Largest h such that some sub-interval of I with h+1 vertices contains no
  // neighbor of u; 0 when u sees all of I.
  int gap = 0;
  // Leftmost largest neighbor-free sub-interval; nullopt iff u sees every
  // vertex of I.
  std::optional<Interval> witness;
};

// Requires u outside I.
GapResult gap(const OrderedGraph& g, Vertex u, Interval iv);

bool adjacent_to_interval(const OrderedGraph& g, Vertex u, Interval iv);

// Largest neighbor of u strictly below lo, or 0 when none exists.
Vertex last_neighbor_below(const OrderedGraph& g, Vertex u, Vertex lo);

// Smallest neighbor of u strictly above hi, or 0 when none exists.
Vertex first_neighbor_above(const OrderedGraph& g, Vertex u, Vertex hi);

// Splits iv into `parts` consecutive intervals of near-equal size, earlier
// parts taking the remainder.  Requires 1 <= parts <= |iv|.
std::vector<Interval> split_interval(Interval iv, int parts);

// Contracts each part to one vertex; parts must tile [1, n] in order.  Keeps
// an edge between distinct parts iff some original edge joins them.
// Contraction preserves the increasing Hamiltonian path when present.
OrderedGraph quotient(const OrderedGraph& g, const std::vector<Interval>& parts);

// Max over cuts (i, i+1) of the number of edges spanning the cut.
int cutwidth(int n, const std::vector<Edge>& f);
int cutwidth(const OrderedGraph& g);

// True iff the ordered subgraph (V, F) has cutwidth <= 1, i.e. F arranges as
// consecutive monotone path segments marching left to right.
bool is_seq_of_increasing_paths(const OrderedGraph& g, const std::vector<Edge>& f);

// Fewest-vertex path s -> t using only position-increasing steps; nullopt if
// unreachable.  Any shortest such path is chordless, hence induced (checked).
// BFS, deterministic: neighbors scanned in ascending order.
std::optional<VertexPath> shortest_increasing_path(const OrderedGraph& g,
                                                   Vertex s, Vertex t);

// True iff p is strictly increasing, consecutive vertices are adjacent, and
// no two non-consecutive vertices are adjacent.  O(n + sum of degrees on p).
bool verify_induced_increasing(const OrderedGraph& g, const VertexPath& p);

// Subgraph induced by the positions of iv, re-indexed to start at 1.
// Original position = local position + iv.lo - 1.
OrderedGraph induced_subgraph(const OrderedGraph& g, Interval iv);

}  // namespace iplab
