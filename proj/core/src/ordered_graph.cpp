#include "iplab/ordered_graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace iplab {

OrderedGraph::OrderedGraph(int n, std::vector<Edge> edges) : n_(n) {
  require(n >= 1, "vertex count must be >= 1");
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u > v) std::swap(u, v);
    require(u != v, "self-loop at position " + std::to_string(u));
    require(1 <= u && v <= n_,
            "edge (" + std::to_string(u) + "," + std::to_string(v) +
                ") outside [1," + std::to_string(n_) + "]");
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  for (size_t i = 1; i < edges_.size(); ++i) {
    require(edges_[i] != edges_[i - 1],
            "duplicate edge (" + std::to_string(edges_[i].first) + "," +
                std::to_string(edges_[i].second) + ")");
  }
  adj_.assign(static_cast<size_t>(n_) + 1, {});
  for (auto [u, v] : edges_) {
    adj_[static_cast<size_t>(u)].push_back(v);
    adj_[static_cast<size_t>(v)].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  ham_ = true;
  for (Vertex v = 1; v + 1 <= n_; ++v) {
    if (!has_edge(v, v + 1)) {
      ham_ = false;
      break;
    }
  }
}

OrderedGraph OrderedGraph::spine(int n) {
  std::vector<Edge> e;
  e.reserve(n > 0 ? static_cast<size_t>(n - 1) : 0);
  for (Vertex v = 1; v + 1 <= n; ++v) e.emplace_back(v, v + 1);
  return OrderedGraph(n, std::move(e));
}

void OrderedGraph::check_vertex(Vertex v) const {
  require(1 <= v && v <= n_, "position " + std::to_string(v) + " outside [1," +
                                 std::to_string(n_) + "]");
}

bool OrderedGraph::has_edge(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  if (u < 1 || v > n_ || u == v) return false;
  const auto& nb = adj_[static_cast<size_t>(u)];
  return std::binary_search(nb.begin(), nb.end(), v);
}

int OrderedGraph::edge_index(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || *it != Edge{u, v}) return -1;
  return static_cast<int>(it - edges_.begin());
}

std::vector<std::pair<Edge, Edge>> crossing_pairs(const OrderedGraph& g,
                                                  const std::vector<Edge>& f) {
  std::vector<Edge> sorted;
  sorted.reserve(f.size());
  for (auto [u, v] : f) {
    if (u > v) std::swap(u, v);
    require(g.has_edge(u, v), "edge set contains (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") which is not in the graph");
    sorted.emplace_back(u, v);
  }
  std::sort(sorted.begin(), sorted.end());

  // Activate edges strictly left of the current left endpoint, bucketed by
  // right endpoint; edge (c,d) then collects partners with b in (c, d).
  std::vector<std::vector<Edge>> by_right(static_cast<size_t>(g.vertex_count()) + 1);
  std::vector<std::pair<Edge, Edge>> out;
  size_t next_activation = 0;
  for (const auto& e : sorted) {
    auto [c, d] = e;
    while (next_activation < sorted.size() && sorted[next_activation].first < c) {
      const auto& a = sorted[next_activation];
      by_right[static_cast<size_t>(a.second)].push_back(a);
      ++next_activation;
    }
    for (Vertex b = c + 1; b < d; ++b) {
      for (const auto& partner : by_right[static_cast<size_t>(b)]) {
        out.emplace_back(partner, e);
      }
    }
  }
  return out;
}

std::optional<std::pair<Edge, Edge>> find_crossing(std::vector<Edge> f) {
  for (auto& [u, v] : f) {
    if (u > v) std::swap(u, v);
  }
  // Left endpoint ascending, right endpoint descending: the active arcs form
  // a nested chain whose innermost member alone decides crossing.
  std::sort(f.begin(), f.end(), [](const Edge& a, const Edge& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second > b.second;
  });
  std::vector<Edge> stack;
  for (const auto& e : f) {
    while (!stack.empty() && stack.back().second <= e.first) stack.pop_back();
    if (!stack.empty() && stack.back().second < e.second) {
      return std::make_pair(stack.back(), e);
    }
    stack.push_back(e);
  }
  return std::nullopt;
}

GapResult gap(const OrderedGraph& g, Vertex u, Interval iv) {
  g.check_vertex(u);
  g.check_vertex(iv.lo);
  g.check_vertex(iv.hi);
  require(iv.lo <= iv.hi, "empty interval");
  require(!iv.contains(u), "gap requires the probe vertex outside the interval");

  const auto& nb = g.neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), iv.lo);
  GapResult best;
  Vertex run_start = iv.lo;
  bool all_hit = true;
  auto consider = [&](Vertex lo, Vertex hi) {
    if (lo > hi) return;
    all_hit = false;
    int sz = hi - lo + 1;
    if (!best.witness || sz > best.witness->size()) {
      best.witness = Interval{lo, hi};
    }
  };
  for (; it != nb.end() && *it <= iv.hi; ++it) {
    consider(run_start, *it - 1);
    run_start = *it + 1;
  }
  consider(run_start, iv.hi);
  if (all_hit) return GapResult{0, std::nullopt};
  best.gap = best.witness->size() - 1;
  return best;
}

bool adjacent_to_interval(const OrderedGraph& g, Vertex u, Interval iv) {
  g.check_vertex(u);
  g.check_vertex(iv.lo);
  g.check_vertex(iv.hi);
  require(iv.lo <= iv.hi, "empty interval");
  const auto& nb = g.neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), iv.lo);
  return it != nb.end() && *it <= iv.hi;
}

Vertex last_neighbor_below(const OrderedGraph& g, Vertex u, Vertex lo) {
  const auto& nb = g.neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), lo);
  if (it == nb.begin()) return 0;
  return *std::prev(it);
}

Vertex first_neighbor_above(const OrderedGraph& g, Vertex u, Vertex hi) {
  const auto& nb = g.neighbors(u);
  auto it = std::upper_bound(nb.begin(), nb.end(), hi);
  if (it == nb.end()) return 0;
  return *it;
}

std::vector<Interval> split_interval(Interval iv, int parts) {
  require(iv.lo <= iv.hi, "empty interval");
  require(parts >= 1 && parts <= iv.size(), "part count outside [1,|iv|]");
  int base = iv.size() / parts;
  int extra = iv.size() % parts;
  std::vector<Interval> out;
  out.reserve(static_cast<size_t>(parts));
  Vertex at = iv.lo;
  for (int i = 0; i < parts; ++i) {
    int sz = base + (i < extra ? 1 : 0);
    out.push_back(Interval{at, at + sz - 1});
    at += sz;
  }
  return out;
}

OrderedGraph quotient(const OrderedGraph& g, const std::vector<Interval>& parts) {
  require(!parts.empty(), "quotient needs at least one part");
  Vertex expect = 1;
  for (const auto& p : parts) {
    require(p.lo == expect && p.lo <= p.hi, "parts must tile [1,n] in order");
    expect = p.hi + 1;
  }
  require(expect == g.vertex_count() + 1, "parts must cover all positions");

  std::vector<int> part_of(static_cast<size_t>(g.vertex_count()) + 1);
  for (size_t i = 0; i < parts.size(); ++i) {
    for (Vertex v = parts[i].lo; v <= parts[i].hi; ++v) {
      part_of[static_cast<size_t>(v)] = static_cast<int>(i) + 1;
    }
  }
  std::vector<Edge> qedges;
  for (auto [u, v] : g.edges()) {
    int pu = part_of[static_cast<size_t>(u)];
    int pv = part_of[static_cast<size_t>(v)];
    if (pu != pv) qedges.emplace_back(pu, pv);
  }
  std::sort(qedges.begin(), qedges.end());
  qedges.erase(std::unique(qedges.begin(), qedges.end()), qedges.end());
  OrderedGraph q(static_cast<int>(parts.size()), std::move(qedges));
  if (g.has_increasing_ham_path()) {
    IPLAB_ASSERT(q.has_increasing_ham_path(),
                 "contraction must keep the increasing Hamiltonian path");
  }
  return q;
}

int cutwidth(int n, const std::vector<Edge>& f) {
  require(n >= 1, "vertex count must be >= 1");
  if (n == 1 || f.empty()) return 0;
  // Edge (u,v) loads every cut u..v-1; sweep a difference array.
  std::vector<int> diff(static_cast<size_t>(n) + 1, 0);
  for (auto [u, v] : f) {
    if (u > v) std::swap(u, v);
    require(1 <= u && v <= n && u != v, "bad edge in cutwidth");
    diff[static_cast<size_t>(u)] += 1;
    diff[static_cast<size_t>(v)] -= 1;
  }
  int cur = 0, best = 0;
  for (Vertex i = 1; i <= n - 1; ++i) {
    cur += diff[static_cast<size_t>(i)];
    best = std::max(best, cur);
  }
  return best;
}

int cutwidth(const OrderedGraph& g) { return cutwidth(g.vertex_count(), g.edges()); }

bool is_seq_of_increasing_paths(const OrderedGraph& g, const std::vector<Edge>& f) {
  for (auto [u, v] : f) {
    require(g.has_edge(u, v), "edge set not contained in the graph");
  }
  return cutwidth(g.vertex_count(), f) <= 1;
}

std::optional<VertexPath> shortest_increasing_path(const OrderedGraph& g,
                                                   Vertex s, Vertex t) {
  g.check_vertex(s);
  g.check_vertex(t);
  require(s < t, "need s < t");
  std::vector<int> parent(static_cast<size_t>(g.vertex_count()) + 1, 0);
  std::deque<Vertex> queue{s};
  parent[static_cast<size_t>(s)] = s;
  while (!queue.empty() && parent[static_cast<size_t>(t)] == 0) {
    Vertex v = queue.front();
    queue.pop_front();
    const auto& nb = g.neighbors(v);
    for (auto it = std::upper_bound(nb.begin(), nb.end(), v); it != nb.end(); ++it) {
      if (parent[static_cast<size_t>(*it)] == 0) {
        parent[static_cast<size_t>(*it)] = v;
        queue.push_back(*it);
      }
    }
  }
  if (parent[static_cast<size_t>(t)] == 0) return std::nullopt;
  VertexPath path;
  for (Vertex v = t; v != s; v = parent[static_cast<size_t>(v)]) path.seq.push_back(v);
  path.seq.push_back(s);
  std::reverse(path.seq.begin(), path.seq.end());
  // Fewest vertices implies chordless: a chord would shortcut the walk.
  IPLAB_ASSERT(verify_induced_increasing(g, path),
               "shortest increasing path must be induced");
  return path;
}

bool verify_induced_increasing(const OrderedGraph& g, const VertexPath& p) {
  if (p.empty()) return false;
  for (Vertex v : p.seq) {
    if (v < 1 || v > g.vertex_count()) return false;
  }
  for (size_t i = 1; i < p.seq.size(); ++i) {
    if (p.seq[i - 1] >= p.seq[i]) return false;
    if (!g.has_edge(p.seq[i - 1], p.seq[i])) return false;
  }
  std::vector<int> pos(static_cast<size_t>(g.vertex_count()) + 1, -1);
  for (size_t i = 0; i < p.seq.size(); ++i) pos[static_cast<size_t>(p.seq[i])] = static_cast<int>(i);
  for (size_t i = 0; i < p.seq.size(); ++i) {
    for (Vertex w : g.neighbors(p.seq[i])) {
      int j = pos[static_cast<size_t>(w)];
      if (j >= 0 && std::abs(j - static_cast<int>(i)) >= 2) return false;
    }
  }
  return true;
}

OrderedGraph induced_subgraph(const OrderedGraph& g, Interval iv) {
  g.check_vertex(iv.lo);
  g.check_vertex(iv.hi);
  require(iv.lo <= iv.hi, "empty interval");
  std::vector<Edge> e;
  for (Vertex u = iv.lo; u <= iv.hi; ++u) {
    const auto& nb = g.neighbors(u);
    for (auto it = std::upper_bound(nb.begin(), nb.end(), u);
         it != nb.end() && *it <= iv.hi; ++it) {
      e.emplace_back(u - iv.lo + 1, *it - iv.lo + 1);
    }
  }
  return OrderedGraph(iv.size(), std::move(e));
}

}  // namespace iplab
