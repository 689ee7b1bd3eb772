#include "iplab/extremal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <tuple>

namespace iplab {

namespace {

// C(a, b) capped: anything above cap reports cap + 1.
std::int64_t binom_capped(int a, int b, std::int64_t cap) {
  if (b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  std::int64_t c = 1;
  for (int i = 1; i <= b; ++i) {
    c = c * (a - b + i) / i;
    if (c > cap) return cap + 1;
  }
  return c;
}

struct RawEdge {
  Vertex u;
  Vertex v;
  int color;
};

// Intermediate form used while assembling family members; n can reach 2^30.
struct RawInstance {
  int n = 0;
  std::vector<RawEdge> edges;
};

void append_shifted(std::vector<RawEdge>& out, const std::vector<RawEdge>& src,
                    Vertex offset) {
  for (const auto& e : src) out.push_back({e.u + offset, e.v + offset, e.color});
}

// Keeps the first occurrence of each (u, v); later duplicates (an added edge
// that a copy already contains) are dropped together with their color.
void dedup_first_wins(std::vector<RawEdge>& edges) {
  std::vector<int> idx(edges.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    const auto& ea = edges[static_cast<size_t>(a)];
    const auto& eb = edges[static_cast<size_t>(b)];
    return std::tie(ea.u, ea.v, a) < std::tie(eb.u, eb.v, b);
  });
  std::vector<RawEdge> out;
  out.reserve(edges.size());
  for (size_t i = 0; i < idx.size(); ++i) {
    const auto& e = edges[static_cast<size_t>(idx[i])];
    if (!out.empty() && out.back().u == e.u && out.back().v == e.v) continue;
    out.push_back(e);
  }
  edges = std::move(out);
}

RawInstance raw_u(int p) {
  RawInstance cur;
  cur.n = 2;
  cur.edges = {{1, 2, 1}};
  for (int level = 1; level <= p; ++level) {
    RawInstance next;
    next.n = 2 * cur.n - 1;
    next.edges = cur.edges;
    append_shifted(next.edges, cur.edges, cur.n - 1);
    next.edges.push_back({1, next.n, 1});
    cur = std::move(next);
  }
  return cur;
}

class GBuilder {
 public:
  const RawInstance& build(int k, int p) {
    auto key = std::make_pair(k, p);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    RawInstance inst;
    if (p == 0) {
      inst.n = 3;
      inst.edges = {{1, 2, 1}, {2, 3, 1}};
    } else if (k == 0) {
      inst = raw_u(p + 1);
    } else {
      // std::map keeps references stable across the nested build calls.
      const RawInstance& middle = build(k, p - 1);  // glued d times
      const RawInstance& outer = build(k - 1, p);   // laid onto the extremities
      int d = outer.n - 1;
      inst.n = d * (middle.n - 1) + 1;

      // d copies of the (k, p-1) level, end to start.
      for (int i = 0; i < d; ++i) {
        append_shifted(inst.edges, middle.edges, i * (middle.n - 1));
      }
      // Extremity positions c_1..c_{d+1}.
      std::vector<Vertex> c(static_cast<size_t>(d) + 1);
      for (int i = 0; i <= d; ++i) c[static_cast<size_t>(i)] = i * (middle.n - 1) + 1;
      // The (k-1, p) level on the extremities, classes 1..2k-1.
      for (const auto& e : outer.edges) {
        inst.edges.push_back({c[static_cast<size_t>(e.u - 1)],
                              c[static_cast<size_t>(e.v - 1)], e.color});
      }
      // Complete bipartite {c_1, c_{d+1}} x interior, one fresh class per hub.
      int child_budget = 2 * k - 1;
      for (int i = 1; i < d; ++i) {
        inst.edges.push_back({c.front(), c[static_cast<size_t>(i)], child_budget + 1});
      }
      for (int i = 1; i < d; ++i) {
        inst.edges.push_back({c[static_cast<size_t>(i)], c.back(), child_budget + 2});
      }
      dedup_first_wins(inst.edges);
      x_sets_[key] = std::move(c);
    }
    return memo_.emplace(key, std::move(inst)).first->second;
  }

  std::vector<Vertex> x_set(int k, int p) const {
    auto it = x_sets_.find(std::make_pair(k, p));
    return it == x_sets_.end() ? std::vector<Vertex>{} : it->second;
  }

 private:
  std::map<std::pair<int, int>, RawInstance> memo_;
  std::map<std::pair<int, int>, std::vector<Vertex>> x_sets_;
};

LabeledInstance finalize(Family family, int k, int p, const RawInstance& raw,
                         std::vector<Vertex> x_set) {
  LabeledInstance inst;
  inst.family = family;
  inst.k = k;
  inst.p = p;
  inst.x_set = std::move(x_set);
  std::vector<Edge> edges;
  edges.reserve(raw.edges.size());
  int max_color = 1;
  for (const auto& e : raw.edges) {
    edges.emplace_back(e.u, e.v);
    max_color = std::max(max_color, e.color);
  }
  inst.graph = OrderedGraph(raw.n, std::move(edges));
  IPLAB_ASSERT(inst.graph.has_increasing_ham_path(),
               "family member lost its increasing Hamiltonian path");
  inst.certificate.k = max_color;
  inst.certificate.color.assign(raw.edges.size(), 0);
  for (const auto& e : raw.edges) {
    int idx = inst.graph.edge_index(e.u, e.v);
    inst.certificate.color[static_cast<size_t>(idx)] = e.color;
  }
  return inst;
}

}  // namespace

OrderedGraph glue(const OrderedGraph& a, const OrderedGraph& b) {
  int n = a.vertex_count() + b.vertex_count() - 1;
  std::vector<Edge> edges = a.edges();
  Vertex offset = a.vertex_count() - 1;
  for (auto [u, v] : b.edges()) edges.emplace_back(u + offset, v + offset);
  return OrderedGraph(n, std::move(edges));
}

LabeledInstance build_u(int p) {
  require(p >= 0, "need p >= 0");
  require(p <= 24, "level capped at 24");
  return finalize(Family::kU, 0, p, raw_u(p), {});
}

LabeledInstance build_g(int k, int p) {
  require(k >= 0 && p >= 0, "need k, p >= 0");
  std::int64_t exponent = binom_capped(k + p + 1, p, 31);
  require(exponent <= 30, "instance would exceed 2^30 vertices");
  GBuilder builder;
  const RawInstance& raw = builder.build(k, p);
  return finalize(Family::kG, k, p, raw, builder.x_set(k, p));
}

std::int64_t expected_size(int k, int p) {
  require(k >= 0 && p >= 0, "need k, p >= 0");
  std::int64_t exponent = binom_capped(k + p + 1, p, 63);
  require(exponent <= 62, "size exceeds the representable range");
  return (std::int64_t{1} << exponent) + 1;
}

int ip_upper_bound(Family family, int k, int p) {
  require(p >= 0, "need p >= 0");
  if (family == Family::kU) return 2 * p + 2;
  require(k >= 0, "need k >= 0");
  if (k == 0) return 2 * (p + 1) + 2;  // alias of build_u(p + 1)
  return 2 * k * (p + 2) + 2;
}

std::pair<OrderedGraph, EdgeColoring> random_two_nc(int n, int chords,
                                                    std::uint64_t seed) {
  require(n >= 2, "need n >= 2");
  require(chords >= 0, "need a nonnegative chord count");

  std::mt19937_64 rng(seed);
  // Engine output reduced by hand; distribution classes are not pinned down
  // across standard libraries.
  auto draw = [&rng](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };

  std::vector<RawEdge> kept;
  for (Vertex i = 1; i < n; ++i) kept.push_back({i, i + 1, 1});
  std::vector<Edge> page[2];

  auto crosses_page = [&](const std::vector<Edge>& pg, Vertex u, Vertex v) {
    for (const auto& [a, b] : pg) {
      if ((a < u && u < b && b < v) || (u < a && a < v && v < b)) return true;
    }
    return false;
  };

  for (int t = 0; t < chords && n >= 3; ++t) {
    Vertex u = draw(1, n - 2);
    Vertex v = draw(u + 2, n);
    bool dup = false;
    for (const auto& e : kept) dup = dup || (e.u == u && e.v == v);
    if (dup) continue;
    if (!crosses_page(page[0], u, v)) {
      page[0].emplace_back(u, v);
      kept.push_back({u, v, 1});
    } else if (!crosses_page(page[1], u, v)) {
      page[1].emplace_back(u, v);
      kept.push_back({u, v, 2});
    }
  }

  std::vector<Edge> edges;
  edges.reserve(kept.size());
  for (const auto& e : kept) edges.emplace_back(e.u, e.v);
  OrderedGraph g(n, std::move(edges));
  EdgeColoring c;
  c.k = 2;
  c.color.assign(kept.size(), 0);
  for (const auto& e : kept) {
    int idx = g.edge_index(e.u, e.v);
    c.color[static_cast<size_t>(idx)] = e.color;
  }
  IPLAB_ASSERT(verify_partition(g, c), "assembled certificate must validate");
  return {std::move(g), std::move(c)};
}

}  // namespace iplab
