#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "iplab/noncross.hpp"
#include "iplab/ordered_graph.hpp"

namespace iplab {

// How a reported path was found.
enum class Method { kGapShortcut, kTripleLoop, kLifting, kOracle };
std::string method_name(Method m);

struct TraceStep {
  int step = 0;
  int interval_size = 0;
  int g = 0;
  std::string branch;  // "gap-u" | "gap-v" | "path" | "trivial"
};

struct PathReport {
  int n = 0;
  Method method = Method::kLifting;
  VertexPath path;
  std::int64_t guarantee = 0;  // certified lower bound on the path size
  int iterations = 0;          // completed growth steps
  std::vector<TraceStep> trace;
};

// Two flank paths closing in on a middle interval: left ends at u < I, right
// starts at v > I, and at least one of u, v has no neighbor inside I.  Flank
// interiors never touch I.
struct GoodTriple {
  Vertex u = 0;
  Vertex v = 0;
  Interval mid;
  VertexPath left;   // increasing induced path whose last vertex is u
  VertexPath right;  // increasing induced path whose first vertex is v

  int size() const { return left.size() + right.size(); }

  // Empty iff every structural condition holds; entries describe breaches.
  std::vector<std::string> violations(const OrderedGraph& g) const;
};

// Interval shrink outcome: x has no neighbor inside witness.
struct GapBranch {
  Vertex x;
  Interval witness;
};

// Block-count parameter for the shrink schedule; >= 2, about
// log2(n) / log2(log2(n)) for large n.
int shrink_ratio(int n);

// Requires u < iv < v and gval >= 1 on a graph with the increasing
// Hamiltonian path; the caller guarantees two crossing-free classes.  Either
// some probe vertex ignores a g-sized sub-interval (returned as GapBranch,
// checking u before v), or both probes hit every block of size >= gval, in
// which case chords across non-adjacent blocks cannot exist and walking the
// middle blocks yields a path of about |iv|/gval - 2 vertices.  Block counts
// below 4 return the two-vertex path at the left edge of iv.
std::variant<VertexPath, GapBranch> gap_or_path(const OrderedGraph& g, Vertex u,
                                                Interval iv, Vertex v, int gval);

// One growth step.  Picks the flank whose tip ignores the middle (u side
// preferred), advances that tip to its nearest-to-middle neighbor on its own
// side, and re-anchors the middle on the shrunken witness interval.  Returns
// the grown triple (size exactly +1) or a path when the middle collapses to
// the path branch.
std::variant<VertexPath, GoodTriple> grow_triple(const OrderedGraph& g,
                                                 const GoodTriple& t, int gval);

// Per-step record used by tests to audit the growth loop.
struct GrowthAudit {
  struct Step {
    int t = 0;
    int size_before = 0;
    int size_after = 0;
    int interval_before = 0;
    int interval_after = 0;
    int g = 0;
    bool path_branch = false;
  };
  std::vector<Step> steps;
};

// Longest-path extraction for a graph certified two-class crossing-free.
// Requires n >= 8 and the increasing Hamiltonian path.  Iterates grow_triple
// with g = max(1, |I| / shrink_ratio(n)) and reports the best of the loop's
// path branch, the longer final flank, and the direct sparse walk from 1
// to n; guarantee is floor(steps / 2).
PathReport extract_2nc(const OrderedGraph& g, const EdgeColoring& c,
                       GrowthAudit* audit = nullptr);

// Planar-ish entry point: find the longest-span edge; if its span is at most
// (n-1) / k_target the walk from 1 to n already has k_target vertices,
// otherwise recurse into that span with a two-class split.
std::variant<VertexPath, std::pair<Interval, EdgeColoring>> reduce_to_2nc(
    const OrderedGraph& g, int k_target);

PathReport extract_planar(const OrderedGraph& g);

struct AllIntervalsFailed : std::runtime_error {
  std::vector<std::string> reasons;
  explicit AllIntervalsFailed(std::vector<std::string> why)
      : std::runtime_error("no interval admitted a two-class split"),
        reasons(std::move(why)) {}
};

// Splits the order into genus + 1 near-equal intervals, runs extract_planar
// on each, and reports the best translated result; intervals whose induced
// subgraph is not two-class splittable are skipped.  Requires
// n >= 2 * (genus + 1).
PathReport extract_genus(const OrderedGraph& g, int genus);

}  // namespace iplab
