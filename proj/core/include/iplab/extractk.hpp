#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "iplab/extract2.hpp"
#include "iplab/noncross.hpp"
#include "iplab/ordered_graph.hpp"

namespace iplab {

enum class Side { kLeft, kRight };

// Rooted tree on host positions with colored edges.  In a left tree every
// parent is larger than its child, so the root is the maximum node; right
// trees mirror this.  Root-to-leaf paths are monotone in position.
struct ColoredTree {
  Side side = Side::kLeft;
  Vertex root = 0;
  std::set<Vertex> nodes;
  // child -> parent; the root has no entry.
  std::map<Vertex, Vertex> parent;
  // (child, parent) -> color; keys mirror the parent map exactly.
  std::map<std::pair<Vertex, Vertex>, int> edge_color;

  static ColoredTree single(Vertex v, Side s);

  int size() const { return static_cast<int>(nodes.size()); }
  bool contains(Vertex v) const { return nodes.count(v) > 0; }

  // Number of vertices on a longest root-to-leaf path.
  int depth() const;

  // A deepest root-to-leaf path, reported in increasing position order.
  // Ties are resolved towards the smallest child.
  VertexPath deepest_path() const;

  // Structural defects: connectivity, orientation, color-key mismatches.
  // Empty for a well-formed tree.
  std::vector<std::string> defects() const;
};

// Colored trees flanking an interval.  Left trees use colors 1..p (tree i
// owns color i), right trees use p+1..k (tree j owns color p+j).  The list
// lengths always equal p and k-p.
struct TreeSurrounding {
  std::vector<ColoredTree> left;
  Interval mid{1, 1};
  std::vector<ColoredTree> right;
  int k = 0;
  int p = 0;

  int total_size() const;
  // Left tree sizes followed by right tree sizes.
  std::vector<int> sizes() const;
};

// Checks the six conditions a surrounding must satisfy and returns the
// indices of those that fail, ascending:
//   1  every left tree precedes the interval, every right tree succeeds it
//   2  left edge colors lie in [1,p], right edge colors in [p+1,k]
//   3  each color class has cutwidth at most 1 and its owner's root is
//      strictly beyond every other vertex touched by that color
//   4  non-root nodes have closed neighborhood disjoint from the interval
//   5  each non-root's parent is its nearest neighbor on the far side of
//      the interval (largest below for left trees, smallest above for right)
//   6  some root has no neighbor in the interval
std::vector<int> verify_surrounding(const OrderedGraph& g, const EdgeColoring& c,
                                    const TreeSurrounding& t);

// Result of shrinking an interval until each outside vertex meets it in a
// single color.  by_color[i-1] is the index into xs of the vertex whose
// edges into the interval all carry color i.
struct MonoResult {
  Interval interval{1, 1};
  std::vector<int> by_color;
};

// Recursively blocks the interval, finds a repeated contact color for the
// last vertex by pigeonhole, recurses on the strict interior, and trims a
// g-sized flank from each side.  Requires every x to have gap at most gval
// towards iv; returns nullopt when the guaranteed size |iv|/k! - 5kg is not
// positive or when some blocking or pigeonhole step has no valid input.
std::optional<MonoResult> mono_interval(const OrderedGraph& g,
                                        const EdgeColoring& c, Interval iv,
                                        const std::vector<Vertex>& xs, int gval);

// Either a vertex with gap strictly more than gval towards iv (returned with
// its leftmost witness) or an increasing induced path walked across the
// shrunken interval's blocks.  When no monochromatic interval exists the
// path degrades to a two-vertex spine step.
std::variant<VertexPath, GapBranch> gap_k_or_path(const OrderedGraph& g,
                                                  const EdgeColoring& c,
                                                  Interval iv,
                                                  const std::vector<Vertex>& xs,
                                                  int gval);

// Raised when a growth step would place its fresh single-vertex tree on an
// occupied position.  The structure is reported, never repaired.
struct DegenerateSurrounding : std::runtime_error {
  explicit DegenerateSurrounding(const std::string& what)
      : std::runtime_error(what) {}
};

// What a successful growth step did, for reporting.
struct GrowthCase {
  Side side = Side::kLeft;
  bool merged = false;
  // 1-based index of the tree whose root was grown, within its side.
  int tree_index = 0;
};

// One growth step: pick the smallest root with no neighbor in the interval,
// attach it under its nearest far-side neighbor (absorbing that neighbor's
// tree and spawning a fresh singleton when the neighbor is already claimed),
// then re-establish a root-free sub-interval of size at least gval via
// gap_k_or_path.  Total tree size grows by exactly one.  May instead return
// the increasing induced path found along the way.
std::variant<VertexPath, TreeSurrounding> grow_surrounding(
    const OrderedGraph& g, const EdgeColoring& c, const TreeSurrounding& t,
    int gval, GrowthCase* note = nullptr);

struct SurroundingAudit {
  struct Step {
    int t = 0;
    int interval_size = 0;
    int g = 0;
    std::vector<int> tree_sizes;
    std::string branch;
  };
  std::vector<Step> steps;
};

// Grows trees around a shrinking interval under the schedule
// g_t = floor(n / (2 (log2 n)^{t+1})), stopping when the schedule drops
// below 1 or a path branch fires, then answers with the best of the deepest
// root-to-leaf path of the largest tree, any path branch, and the direct
// sparse walk from 1 to n.  The certificate requires exactly k color
// classes.
PathReport extract_knc(const OrderedGraph& g, const EdgeColoring& c, int k,
                       SurroundingAudit* audit = nullptr);

// C(depth + colors - 1, colors): ceiling on the node count of a rooted tree
// compatible with an order of cutwidth at most `colors`.  Zero when depth is
// zero; saturates at the largest representable value.
std::int64_t tree_size_bound(int depth, int colors);

// 2 - p + (p/e) * size^(1/p): floor on the depth of a p-colored tree whose
// color classes each have cutwidth at most 1.  Reported as a certificate,
// never used for control flow.
double depth_lower_bound(std::int64_t size, int p);

}  // namespace iplab
