#pragma once

#include <cstdint>
#include <vector>

#include "iplab/ordered_graph.hpp"

namespace iplab {

struct OracleResult {
  VertexPath best;
  bool optimal = false;        // false iff the budget ran out first
  std::int64_t nodes_expanded = 0;
  double time_ms = 0.0;        // informational only; excluded from reports
};

inline constexpr std::int64_t kDefaultOracleBudget = 100'000'000;

// Longest induced path, any vertex order along the path.  Depth-first search
// extending one endpoint, pruned by the count of still-placeable vertices.
// budget caps node expansions; when it runs out the incumbent is returned
// with optimal = false.
OracleResult longest_induced_path(const OrderedGraph& g,
                                  std::int64_t budget = kDefaultOracleBudget);

// Longest induced path whose positions strictly increase.  Exact DFS; for
// n <= 64 states (endpoint, blocked-suffix bitmask) are memoized, which keeps
// the search polynomial on the instances we care about.
OracleResult longest_increasing_induced_path(const OrderedGraph& g,
                                             std::int64_t budget = kDefaultOracleBudget);

}  // namespace iplab
