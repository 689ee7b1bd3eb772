#include "iplab/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <unordered_map>

namespace iplab {

namespace {

struct UnrestrictedSearch {
  const OrderedGraph& g;
  std::int64_t budget;
  std::int64_t expanded = 0;
  bool truncated = false;
  std::vector<int> blocked;   // #path vertices (excluding the tip) adjacent to v
  std::vector<char> on_path;
  std::vector<Vertex> cur;
  std::vector<Vertex> best;

  UnrestrictedSearch(const OrderedGraph& graph, std::int64_t b)
      : g(graph), budget(b),
        blocked(static_cast<size_t>(graph.vertex_count()) + 1, 0),
        on_path(static_cast<size_t>(graph.vertex_count()) + 1, 0) {}

  // Along one branch blocked counts only grow, so currently blocked vertices
  // can never join deeper in the branch; the free count bounds the reach.
  int placeable_upper_bound() const {
    int free_count = 0;
    for (Vertex v = 1; v <= g.vertex_count(); ++v) {
      if (!on_path[static_cast<size_t>(v)] && blocked[static_cast<size_t>(v)] == 0) ++free_count;
    }
    return static_cast<int>(cur.size()) + free_count;
  }

  void extend(Vertex tip) {
    if (truncated) return;
    if (++expanded > budget) {
      truncated = true;
      return;
    }
    if (cur.size() > best.size()) best = cur;
    if (placeable_upper_bound() <= static_cast<int>(best.size())) return;
    for (Vertex w : g.neighbors(tip)) {
      if (on_path[static_cast<size_t>(w)] || blocked[static_cast<size_t>(w)] != 0) continue;
      // tip stops being an endpoint: its other neighbors become off-limits.
      for (Vertex x : g.neighbors(tip)) blocked[static_cast<size_t>(x)] += 1;
      blocked[static_cast<size_t>(w)] -= 1;
      on_path[static_cast<size_t>(w)] = 1;
      cur.push_back(w);
      extend(w);
      cur.pop_back();
      on_path[static_cast<size_t>(w)] = 0;
      blocked[static_cast<size_t>(w)] += 1;
      for (Vertex x : g.neighbors(tip)) blocked[static_cast<size_t>(x)] -= 1;
      if (truncated) return;
    }
  }

  void run() {
    for (Vertex s = 1; s <= g.vertex_count() && !truncated; ++s) {
      on_path[static_cast<size_t>(s)] = 1;
      cur.push_back(s);
      extend(s);
      cur.pop_back();
      on_path[static_cast<size_t>(s)] = 0;
    }
  }
};

// Exact memoized DP for the increasing variant, n <= 64 only.  A state is
// (tip, mask) where bit (w - tip - 1) of mask marks a position w > tip that
// is adjacent to some earlier path vertex and therefore unusable.  The value
// is the exact number of vertices addable after tip.
struct IncreasingMemo {
  const OrderedGraph& g;
  std::int64_t budget;
  std::int64_t expanded = 0;
  bool truncated = false;
  std::vector<std::unordered_map<std::uint64_t, int>> memo;

  IncreasingMemo(const OrderedGraph& graph, std::int64_t b)
      : g(graph), budget(b), memo(static_cast<size_t>(graph.vertex_count()) + 1) {}

  // Advancing tip -> w re-bases the mask to w and forbids the rest of tip's
  // neighborhood: tip stops being the endpoint, so adjacency to it becomes a
  // chord.  w's own neighbors stay usable.
  std::uint64_t mask_after(Vertex tip, std::uint64_t mask, Vertex w) const {
    std::uint64_t next = (w - tip) < 64 ? mask >> (w - tip) : 0;
    const auto& nb = g.neighbors(tip);
    for (auto it = std::upper_bound(nb.begin(), nb.end(), w); it != nb.end(); ++it) {
      if (*it - w - 1 < 64) next |= 1ULL << (*it - w - 1);
    }
    return next;
  }

  int completion(Vertex tip, std::uint64_t mask) {
    if (truncated) return 0;
    auto& table = memo[static_cast<size_t>(tip)];
    if (auto it = table.find(mask); it != table.end()) return it->second;
    if (++expanded > budget) {
      truncated = true;
      return 0;
    }
    int result = 0;
    const auto& nb = g.neighbors(tip);
    for (auto it = std::upper_bound(nb.begin(), nb.end(), tip); it != nb.end(); ++it) {
      Vertex w = *it;
      if ((mask >> (w - tip - 1)) & 1) continue;
      result = std::max(result, 1 + completion(w, mask_after(tip, mask, w)));
      if (truncated) return result;
    }
    table.emplace(mask, result);
    return result;
  }

  std::vector<Vertex> reconstruct(Vertex start, int len) {
    std::vector<Vertex> path{start};
    Vertex tip = start;
    std::uint64_t mask = 0;
    int remaining = len - 1;
    while (remaining > 0) {
      bool advanced = false;
      const auto& nb = g.neighbors(tip);
      for (auto it = std::upper_bound(nb.begin(), nb.end(), tip);
           it != nb.end() && !advanced; ++it) {
        Vertex w = *it;
        if ((mask >> (w - tip - 1)) & 1) continue;
        std::uint64_t next = mask_after(tip, mask, w);
        if (1 + completion(w, next) == remaining) {
          path.push_back(w);
          tip = w;
          mask = next;
          remaining -= 1;
          advanced = true;
        }
      }
      IPLAB_ASSERT(advanced, "increasing oracle reconstruction lost the optimum");
    }
    return path;
  }
};

// Plain DFS with an explicit trail; used above 64 vertices and as the
// incumbent provider when the exact pass hits the budget.
struct IncreasingTrail {
  const OrderedGraph& g;
  std::int64_t budget;
  std::int64_t expanded = 0;
  bool truncated = false;
  std::vector<Vertex> cur;
  std::vector<Vertex> best;

  IncreasingTrail(const OrderedGraph& graph, std::int64_t b) : g(graph), budget(b) {}

  bool blocked(Vertex w) const {
    for (size_t i = 0; i + 1 < cur.size(); ++i) {
      if (g.has_edge(cur[i], w)) return true;
    }
    return false;
  }

  void extend(Vertex tip) {
    if (truncated) return;
    if (++expanded > budget) {
      truncated = true;
      return;
    }
    if (cur.size() > best.size()) best = cur;
    const auto& nb = g.neighbors(tip);
    for (auto it = std::upper_bound(nb.begin(), nb.end(), tip); it != nb.end(); ++it) {
      if (blocked(*it)) continue;
      cur.push_back(*it);
      extend(*it);
      cur.pop_back();
      if (truncated) return;
    }
  }

  void run() {
    for (Vertex s = 1; s <= g.vertex_count() && !truncated; ++s) {
      cur.push_back(s);
      extend(s);
      cur.pop_back();
    }
  }
};

}  // namespace

OracleResult longest_induced_path(const OrderedGraph& g, std::int64_t budget) {
  require(budget > 0, "budget must be positive");
  auto t0 = std::chrono::steady_clock::now();
  UnrestrictedSearch search(g, budget);
  search.run();
  OracleResult res;
  res.best.seq = search.best;
  res.optimal = !search.truncated;
  res.nodes_expanded = search.expanded;
  res.time_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0).count();
  return res;
}

OracleResult longest_increasing_induced_path(const OrderedGraph& g, std::int64_t budget) {
  require(budget > 0, "budget must be positive");
  auto t0 = std::chrono::steady_clock::now();
  OracleResult res;
  if (g.vertex_count() <= 64) {
    IncreasingMemo exact(g, budget);
    int best_len = 0;
    Vertex best_start = 0;
    for (Vertex s = 1; s <= g.vertex_count() && !exact.truncated; ++s) {
      int len = 1 + exact.completion(s, 0);
      if (len > best_len) {
        best_len = len;
        best_start = s;
      }
    }
    res.nodes_expanded = exact.expanded;
    if (!exact.truncated) {
      res.best.seq = exact.reconstruct(best_start, best_len);
      res.optimal = true;
    }
  }
  if (res.best.empty()) {
    IncreasingTrail fallback(g, budget);
    fallback.run();
    res.best.seq = fallback.best;
    res.optimal = !fallback.truncated && res.nodes_expanded == 0;
    res.nodes_expanded += fallback.expanded;
  }
  res.time_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0).count();
  if (!res.best.empty()) {
    IPLAB_ASSERT(verify_induced_increasing(g, res.best),
                 "oracle returned a non-induced increasing path");
  }
  return res;
}

}  // namespace iplab
