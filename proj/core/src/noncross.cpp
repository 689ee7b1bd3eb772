#include "iplab/noncross.hpp"

#include <algorithm>
#include <deque>

namespace iplab {

int EdgeColoring::color_of(const OrderedGraph& g, Vertex u, Vertex v) const {
  int idx = g.edge_index(u, v);
  require(idx >= 0, "color_of: no such edge");
  return color[static_cast<size_t>(idx)];
}

std::vector<std::vector<Edge>> EdgeColoring::classes(const OrderedGraph& g) const {
  require(color.size() == g.edges().size(), "coloring does not match edge list");
  std::vector<std::vector<Edge>> out(static_cast<size_t>(k));
  for (size_t i = 0; i < color.size(); ++i) {
    require(1 <= color[i] && color[i] <= k, "class out of range");
    out[static_cast<size_t>(color[i]) - 1].push_back(g.edges()[i]);
  }
  return out;
}

ConflictGraph build_conflict_graph(const OrderedGraph& g) {
  ConflictGraph cg;
  cg.nodes = g.edge_count();
  cg.adj.assign(static_cast<size_t>(cg.nodes), {});
  for (const auto& [e1, e2] : crossing_pairs(g, g.edges())) {
    int a = g.edge_index(e1.first, e1.second);
    int b = g.edge_index(e2.first, e2.second);
    cg.arcs.emplace_back(a, b);
    cg.adj[static_cast<size_t>(a)].push_back(b);
    cg.adj[static_cast<size_t>(b)].push_back(a);
  }
  for (auto& nb : cg.adj) std::sort(nb.begin(), nb.end());
  return cg;
}

namespace {

// BFS 2-coloring; on conflict, walks both parent chains to assemble the odd
// cycle through the offending arc.
std::vector<int> bipartition_or_odd_cycle(const ConflictGraph& cg,
                                          std::vector<int>* odd_cycle_nodes) {
  std::vector<int> side(static_cast<size_t>(cg.nodes), 0);
  std::vector<int> parent(static_cast<size_t>(cg.nodes), -1);
  for (int root = 0; root < cg.nodes; ++root) {
    if (side[static_cast<size_t>(root)] != 0) continue;
    side[static_cast<size_t>(root)] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : cg.adj[static_cast<size_t>(v)]) {
        if (side[static_cast<size_t>(w)] == 0) {
          side[static_cast<size_t>(w)] = 3 - side[static_cast<size_t>(v)];
          parent[static_cast<size_t>(w)] = v;
          queue.push_back(w);
        } else if (side[static_cast<size_t>(w)] == side[static_cast<size_t>(v)]) {
          std::vector<int> up_v{v}, up_w{w};
          while (up_v.back() != root) up_v.push_back(parent[static_cast<size_t>(up_v.back())]);
          while (up_w.back() != root) up_w.push_back(parent[static_cast<size_t>(up_w.back())]);
          // Drop the shared tail above the lowest common ancestor.
          while (up_v.size() >= 2 && up_w.size() >= 2 &&
                 up_v[up_v.size() - 2] == up_w[up_w.size() - 2]) {
            up_v.pop_back();
            up_w.pop_back();
          }
          std::vector<int> cycle(up_v.begin(), up_v.end());
          cycle.insert(cycle.end(), up_w.rbegin() + 1, up_w.rend());
          *odd_cycle_nodes = std::move(cycle);
          return {};
        }
      }
    }
  }
  return side;
}

}  // namespace

EdgeColoring two_partition(const OrderedGraph& g) {
  ConflictGraph cg = build_conflict_graph(g);
  std::vector<int> odd_cycle_nodes;
  std::vector<int> side = bipartition_or_odd_cycle(cg, &odd_cycle_nodes);
  if (side.empty()) {
    std::vector<Edge> cycle;
    cycle.reserve(odd_cycle_nodes.size());
    for (int node : odd_cycle_nodes) cycle.push_back(g.edges()[static_cast<size_t>(node)]);
    throw NotTwoPartitionable(std::move(cycle));
  }
  EdgeColoring c;
  c.k = 2;
  c.color = std::move(side);
  IPLAB_ASSERT(verify_partition(g, c), "two_partition produced an invalid split");
  return c;
}

namespace {

bool crosses(const Edge& a, const Edge& b) {
  return (a.first < b.first && b.first < a.second && a.second < b.second) ||
         (b.first < a.first && a.first < b.second && b.second < a.second);
}

// Backtracking over the nonzero-degree conflict nodes, highest degree first.
bool color_exact(const ConflictGraph& cg, const std::vector<int>& order, size_t at,
                 int k, std::vector<int>& color) {
  if (at == order.size()) return true;
  int node = order[at];
  for (int c = 1; c <= k; ++c) {
    bool ok = true;
    for (int w : cg.adj[static_cast<size_t>(node)]) {
      if (color[static_cast<size_t>(w)] == c) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    color[static_cast<size_t>(node)] = c;
    if (color_exact(cg, order, at + 1, k, color)) return true;
    color[static_cast<size_t>(node)] = 0;
  }
  return false;
}

}  // namespace

std::optional<KPartitionResult> k_partition(const OrderedGraph& g, int k,
                                            int exact_threshold) {
  require(k >= 1, "need k >= 1");
  ConflictGraph cg = build_conflict_graph(g);
  std::vector<int> contested;
  for (int i = 0; i < cg.nodes; ++i) {
    if (cg.degree(i) > 0) contested.push_back(i);
  }

  KPartitionResult res;
  res.coloring.k = k;
  res.coloring.color.assign(static_cast<size_t>(cg.nodes), 1);

  if (static_cast<int>(contested.size()) <= exact_threshold) {
    res.method = PartitionMethod::kExact;
    std::vector<int> order = contested;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return cg.degree(a) > cg.degree(b);
    });
    std::vector<int> color(static_cast<size_t>(cg.nodes), 0);
    if (!color_exact(cg, order, 0, k, color)) return std::nullopt;
    for (int node : contested) {
      res.coloring.color[static_cast<size_t>(node)] = color[static_cast<size_t>(node)];
    }
  } else {
    res.method = PartitionMethod::kGreedy;
    // First-fit by (span descending, left endpoint ascending): long arcs are
    // the hardest to place, so they go first.
    std::vector<int> order(static_cast<size_t>(cg.nodes));
    for (int i = 0; i < cg.nodes; ++i) order[static_cast<size_t>(i)] = i;
    const auto& edges = g.edges();
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      const Edge& ea = edges[static_cast<size_t>(a)];
      const Edge& eb = edges[static_cast<size_t>(b)];
      int sa = ea.second - ea.first, sb = eb.second - eb.first;
      if (sa != sb) return sa > sb;
      return ea.first < eb.first;
    });
    std::vector<std::vector<Edge>> members(static_cast<size_t>(k));
    std::vector<int> color(static_cast<size_t>(cg.nodes), 0);
    for (int node : order) {
      const Edge& e = edges[static_cast<size_t>(node)];
      int placed = 0;
      for (int c = 1; c <= k && placed == 0; ++c) {
        bool ok = true;
        for (const Edge& other : members[static_cast<size_t>(c) - 1]) {
          if (crosses(e, other)) {
            ok = false;
            break;
          }
        }
        if (ok) placed = c;
      }
      if (placed == 0) return std::nullopt;
      color[static_cast<size_t>(node)] = placed;
      members[static_cast<size_t>(placed) - 1].push_back(e);
    }
    res.coloring.color = std::move(color);
  }
  IPLAB_ASSERT(verify_partition(g, res.coloring), "k_partition produced an invalid split");
  return res;
}

bool verify_partition(const OrderedGraph& g, const EdgeColoring& c) {
  if (c.k < 1) return false;
  if (c.color.size() != g.edges().size()) return false;
  for (int col : c.color) {
    if (col < 1 || col > c.k) return false;
  }
  return !first_class_crossing(g, c).has_value();
}

std::optional<std::pair<Edge, Edge>> first_class_crossing(const OrderedGraph& g,
                                                          const EdgeColoring& c,
                                                          int* out_class) {
  require(c.color.size() == g.edges().size(), "coloring does not match edge list");
  std::vector<std::vector<Edge>> by_class(static_cast<size_t>(std::max(c.k, 1)));
  for (size_t i = 0; i < c.color.size(); ++i) {
    int col = c.color[i];
    require(1 <= col && col <= c.k, "class out of range");
    by_class[static_cast<size_t>(col) - 1].push_back(g.edges()[i]);
  }
  for (int col = 1; col <= c.k; ++col) {
    if (auto hit = find_crossing(by_class[static_cast<size_t>(col) - 1])) {
      if (out_class != nullptr) *out_class = col;
      return hit;
    }
  }
  return std::nullopt;
}

}  // namespace iplab
