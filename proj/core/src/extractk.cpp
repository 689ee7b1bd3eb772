#include "iplab/extractk.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace iplab {

namespace {

VertexPath translate(VertexPath p, Vertex offset) {
  for (Vertex& v : p.seq) v += offset;
  return p;
}

// A consecutive spine pair near `at`, the degenerate but always-valid answer.
VertexPath spine_pair(const OrderedGraph& g, Vertex at) {
  VertexPath p;
  if (at + 1 <= g.vertex_count()) {
    p.seq = {at, at + 1};
  } else {
    p.seq = {at - 1, at};
  }
  IPLAB_ASSERT(verify_induced_increasing(g, p), "spine step must be induced");
  return p;
}

std::int64_t capped_factorial(int k, std::int64_t cap) {
  std::int64_t f = 1;
  for (int i = 2; i <= k; ++i) {
    if (f > cap / i) return cap;
    f *= i;
  }
  return f;
}

struct MonoFrame {
  Interval interval;
  // (index into xs, color) for every vertex matched so far.
  std::vector<std::pair<int, int>> matched;
};

std::optional<MonoFrame> mono_rec(const OrderedGraph& g, const EdgeColoring& c,
                                  Interval iv, const std::vector<Vertex>& xs,
                                  std::vector<int> active,
                                  std::vector<int> colors, int gval) {
  // Edges from the active vertices into the interval may only use active
  // colors; the outer levels peeled every other color off.
  for (int idx : active) {
    Vertex x = xs[static_cast<size_t>(idx)];
    const auto& nb = g.neighbors(x);
    for (auto it = std::lower_bound(nb.begin(), nb.end(), iv.lo);
         it != nb.end() && *it <= iv.hi; ++it) {
      int col = c.color_of(g, x, *it);
      IPLAB_ASSERT(std::find(colors.begin(), colors.end(), col) != colors.end(),
                   "active-color invariant broken");
    }
  }

  if (active.size() == 1) {
    return MonoFrame{iv, {{active[0], colors[0]}}};
  }

  int kc = static_cast<int>(active.size());
  int p = iv.size() / gval;
  if (p < 2) return std::nullopt;
  std::vector<Interval> blocks = split_interval(iv, p);

  // Contact color of the last active vertex towards each block; bail out
  // when a block is skipped, the repeat pattern is then unusable.
  Vertex xk = xs[static_cast<size_t>(active.back())];
  std::vector<int> contact(static_cast<size_t>(p), 0);
  for (int t = 0; t < p; ++t) {
    const auto& nb = g.neighbors(xk);
    auto it = std::lower_bound(nb.begin(), nb.end(), blocks[static_cast<size_t>(t)].lo);
    if (it == nb.end() || *it > blocks[static_cast<size_t>(t)].hi) return std::nullopt;
    contact[static_cast<size_t>(t)] = c.color_of(g, xk, *it);
  }

  // Leftmost repeated contact color at block distance at least p/kc.
  int a = -1;
  int b = -1;
  for (int i = 0; i < p && a < 0; ++i) {
    for (int j = i + 1; j < p; ++j) {
      if (contact[static_cast<size_t>(i)] == contact[static_cast<size_t>(j)] &&
          kc * (j - i + 1) >= p) {
        a = i;
        b = j;
        break;
      }
    }
  }
  if (a < 0 || b - a < 2) return std::nullopt;

  Interval interior{blocks[static_cast<size_t>(a) + 1].lo,
                    blocks[static_cast<size_t>(b) - 1].hi};
  int repeat = contact[static_cast<size_t>(a)];
  int xk_idx = active.back();
  active.pop_back();
  auto col_it = std::find(colors.begin(), colors.end(), repeat);
  IPLAB_ASSERT(col_it != colors.end(), "repeated color must be active");
  colors.erase(col_it);

  auto sub = mono_rec(g, c, interior, xs, std::move(active), std::move(colors), gval);
  if (!sub) return std::nullopt;

  // Trim a g-sized flank from each side.  When every matched vertex reaches
  // both flanks, the last vertex's contacts inside the remainder are forced
  // into the repeated color; a missed flank voids that argument.
  if (sub->interval.size() < 2 * gval + 1) return std::nullopt;
  Interval flank_lo{sub->interval.lo, sub->interval.lo + gval - 1};
  Interval flank_hi{sub->interval.hi - gval + 1, sub->interval.hi};
  for (const auto& [idx, col] : sub->matched) {
    Vertex x = xs[static_cast<size_t>(idx)];
    if (!adjacent_to_interval(g, x, flank_lo) ||
        !adjacent_to_interval(g, x, flank_hi)) {
      return std::nullopt;
    }
  }
  sub->interval = Interval{sub->interval.lo + gval, sub->interval.hi - gval};
  sub->matched.emplace_back(xk_idx, repeat);
  return sub;
}

int side_colors(const TreeSurrounding& t, Side s) {
  return s == Side::kLeft ? t.p : t.k - t.p;
}

}  // namespace

ColoredTree ColoredTree::single(Vertex v, Side s) {
  ColoredTree t;
  t.side = s;
  t.root = v;
  t.nodes.insert(v);
  return t;
}

int ColoredTree::depth() const { return deepest_path().size(); }

VertexPath ColoredTree::deepest_path() const {
  std::map<Vertex, std::vector<Vertex>> kids;
  for (const auto& [child, par] : parent) kids[par].push_back(child);

  // Children sit strictly on one side of their parent, so a single sweep in
  // the right direction sees every child before its parent.
  std::map<Vertex, int> below;
  auto settle = [&](Vertex v) {
    int deepest = 0;
    auto it = kids.find(v);
    if (it != kids.end()) {
      for (Vertex w : it->second) deepest = std::max(deepest, below[w]);
    }
    below[v] = deepest + 1;
  };
  if (side == Side::kLeft) {
    for (auto it = nodes.begin(); it != nodes.end(); ++it) settle(*it);
  } else {
    for (auto it = nodes.rbegin(); it != nodes.rend(); ++it) settle(*it);
  }

  VertexPath path;
  Vertex at = root;
  path.seq.push_back(at);
  while (kids.count(at) > 0) {
    Vertex pick = 0;
    int best = 0;
    for (Vertex w : kids[at]) {
      if (below[w] > best) {
        best = below[w];
        pick = w;
      }
    }
    path.seq.push_back(pick);
    at = pick;
  }
  IPLAB_ASSERT(static_cast<int>(path.seq.size()) == below[root],
               "deepest walk must realize the computed depth");
  if (path.seq.size() >= 2 && path.seq.front() > path.seq.back()) {
    std::reverse(path.seq.begin(), path.seq.end());
  }
  for (size_t i = 1; i < path.seq.size(); ++i) {
    IPLAB_ASSERT(path.seq[i - 1] < path.seq[i], "tree branch must be monotone");
  }
  return path;
}

std::vector<std::string> ColoredTree::defects() const {
  std::vector<std::string> out;
  if (nodes.empty()) {
    out.push_back("no nodes");
    return out;
  }
  if (nodes.count(root) == 0) out.push_back("root outside the node set");
  if (parent.count(root) > 0) out.push_back("root has a parent");
  if (parent.size() + 1 != nodes.size()) {
    out.push_back("parent map does not cover exactly the non-roots");
  }
  for (const auto& [child, par] : parent) {
    if (nodes.count(child) == 0 || nodes.count(par) == 0) {
      out.push_back("parent edge leaves the node set");
      break;
    }
  }
  for (const auto& [child, par] : parent) {
    bool ok = side == Side::kLeft ? child < par : child > par;
    if (!ok) {
      out.push_back("parent on the wrong side of its child");
      break;
    }
  }
  for (Vertex v : nodes) {
    Vertex at = v;
    size_t hops = 0;
    while (at != root && hops <= nodes.size()) {
      auto it = parent.find(at);
      if (it == parent.end()) break;
      at = it->second;
      ++hops;
    }
    if (at != root) {
      out.push_back("node cannot reach the root");
      break;
    }
  }
  if (edge_color.size() != parent.size()) out.push_back("color map size mismatch");
  for (const auto& [child, par] : parent) {
    auto it = edge_color.find({child, par});
    if (it == edge_color.end()) {
      out.push_back("uncolored tree edge");
      break;
    }
    if (it->second < 1) {
      out.push_back("nonpositive edge color");
      break;
    }
  }
  return out;
}

int TreeSurrounding::total_size() const {
  int total = 0;
  for (const auto& t : left) total += t.size();
  for (const auto& t : right) total += t.size();
  return total;
}

std::vector<int> TreeSurrounding::sizes() const {
  std::vector<int> out;
  out.reserve(left.size() + right.size());
  for (const auto& t : left) out.push_back(t.size());
  for (const auto& t : right) out.push_back(t.size());
  return out;
}

std::vector<int> verify_surrounding(const OrderedGraph& g, const EdgeColoring&,
                                    const TreeSurrounding& t) {
  require(t.k >= 1 && t.p >= 0 && t.p <= t.k, "need 0 <= p <= k, k >= 1");
  require(static_cast<int>(t.left.size()) == t.p &&
              static_cast<int>(t.right.size()) == t.k - t.p,
          "tree lists must have p and k-p entries");
  for (const auto& tree : t.left) {
    for (Vertex v : tree.nodes) g.check_vertex(v);
  }
  for (const auto& tree : t.right) {
    for (Vertex v : tree.nodes) g.check_vertex(v);
  }

  std::vector<int> violated;
  auto flag = [&](int idx) {
    if (std::find(violated.begin(), violated.end(), idx) == violated.end()) {
      violated.push_back(idx);
    }
  };

  bool mid_ok = 1 <= t.mid.lo && t.mid.lo <= t.mid.hi && t.mid.hi <= g.vertex_count();
  if (!mid_ok) flag(1);

  // 1: trees sit strictly on their side of the interval.
  if (mid_ok) {
    for (const auto& tree : t.left) {
      if (!tree.nodes.empty() && *tree.nodes.rbegin() >= t.mid.lo) flag(1);
    }
    for (const auto& tree : t.right) {
      if (!tree.nodes.empty() && *tree.nodes.begin() <= t.mid.hi) flag(1);
    }
  }

  // 2: color ranges per side.
  for (const auto& tree : t.left) {
    for (const auto& entry : tree.edge_color) {
      if (entry.second < 1 || entry.second > t.p) flag(2);
    }
  }
  for (const auto& tree : t.right) {
    for (const auto& entry : tree.edge_color) {
      if (entry.second <= t.p || entry.second > t.k) flag(2);
    }
  }

  // 3: every color class has cutwidth at most 1 and its owner's root is
  // extremal among the class's endpoints.
  for (int col = 1; col <= t.k; ++col) {
    std::vector<Edge> klass;
    bool in_graph = true;
    auto collect = [&](const ColoredTree& tree) {
      for (const auto& [edge, ecol] : tree.edge_color) {
        if (ecol != col) continue;
        Edge e{std::min(edge.first, edge.second), std::max(edge.first, edge.second)};
        if (!g.has_edge(e.first, e.second)) in_graph = false;
        klass.push_back(e);
      }
    };
    for (const auto& tree : t.left) collect(tree);
    for (const auto& tree : t.right) collect(tree);
    if (!in_graph) {
      flag(3);
      continue;
    }
    if (!is_seq_of_increasing_paths(g, klass)) flag(3);
    Vertex owner = col <= t.p ? t.left[static_cast<size_t>(col) - 1].root
                              : t.right[static_cast<size_t>(col - t.p) - 1].root;
    for (const auto& [u, v] : klass) {
      for (Vertex w : {u, v}) {
        if (w == owner) continue;
        bool ok = col <= t.p ? w < owner : w > owner;
        if (!ok) flag(3);
      }
    }
  }

  // 4 and 5 need a sane interval to be meaningful.
  if (mid_ok) {
    auto check_tree = [&](const ColoredTree& tree) {
      for (Vertex v : tree.nodes) {
        if (v == tree.root) continue;
        if (t.mid.contains(v) || adjacent_to_interval(g, v, t.mid)) flag(4);
        auto it = tree.parent.find(v);
        if (it == tree.parent.end()) continue;
        Vertex want = tree.side == Side::kLeft
                          ? last_neighbor_below(g, v, t.mid.lo)
                          : first_neighbor_above(g, v, t.mid.hi);
        if (want == 0 || want != it->second) flag(5);
      }
    };
    for (const auto& tree : t.left) check_tree(tree);
    for (const auto& tree : t.right) check_tree(tree);

    bool free_root = false;
    for (const auto& tree : t.left) {
      if (!adjacent_to_interval(g, tree.root, t.mid)) free_root = true;
    }
    for (const auto& tree : t.right) {
      if (!adjacent_to_interval(g, tree.root, t.mid)) free_root = true;
    }
    if (!free_root) flag(6);
  }

  std::sort(violated.begin(), violated.end());
  return violated;
}

std::optional<MonoResult> mono_interval(const OrderedGraph& g,
                                        const EdgeColoring& c, Interval iv,
                                        const std::vector<Vertex>& xs, int gval) {
  require(gval >= 1, "need g >= 1");
  int k = static_cast<int>(xs.size());
  require(k >= 1, "need at least one outside vertex");
  require(c.k == k, "need exactly one color class per outside vertex");
  require(iv.lo >= 1 && iv.hi <= g.vertex_count() && iv.lo <= iv.hi,
          "interval outside the host order");
  for (size_t i = 0; i < xs.size(); ++i) {
    require(!iv.contains(xs[i]), "outside vertices must avoid the interval");
    for (size_t j = i + 1; j < xs.size(); ++j) {
      require(xs[i] != xs[j], "outside vertices must be distinct");
    }
  }
  for (Vertex x : xs) {
    require(gap(g, x, iv).gap <= gval, "vertex exceeds the gap ceiling");
  }

  std::int64_t fact = capped_factorial(k, std::int64_t{1} << 62);
  double floor_bound = static_cast<double>(iv.size()) / static_cast<double>(fact) -
                       5.0 * k * gval;
  if (floor_bound <= 0.0) return std::nullopt;

  std::vector<int> active(static_cast<size_t>(k));
  std::vector<int> colors(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) {
    active[static_cast<size_t>(i)] = i;
    colors[static_cast<size_t>(i)] = i + 1;
  }
  auto frame = mono_rec(g, c, iv, xs, std::move(active), std::move(colors), gval);
  if (!frame) return std::nullopt;

  MonoResult res;
  res.interval = frame->interval;
  res.by_color.assign(static_cast<size_t>(k), -1);
  for (const auto& [idx, col] : frame->matched) {
    IPLAB_ASSERT(res.by_color[static_cast<size_t>(col) - 1] == -1,
                 "two vertices claimed one color");
    res.by_color[static_cast<size_t>(col) - 1] = idx;
  }
  for (int assigned : res.by_color) {
    IPLAB_ASSERT(assigned >= 0, "color left without a vertex");
  }

  // Each matched vertex must now meet the interval in its own color alone.
  for (int col = 1; col <= k; ++col) {
    Vertex x = xs[static_cast<size_t>(res.by_color[static_cast<size_t>(col) - 1])];
    const auto& nb = g.neighbors(x);
    for (auto it = std::lower_bound(nb.begin(), nb.end(), res.interval.lo);
         it != nb.end() && *it <= res.interval.hi; ++it) {
      IPLAB_ASSERT(c.color_of(g, x, *it) == col,
                   "contact color drifted off its class");
    }
  }
  IPLAB_ASSERT(static_cast<double>(res.interval.size()) + 1e-9 >= floor_bound,
               "shrunken interval undercut its floor");
  return res;
}

std::variant<VertexPath, GapBranch> gap_k_or_path(const OrderedGraph& g,
                                                  const EdgeColoring& c,
                                                  Interval iv,
                                                  const std::vector<Vertex>& xs,
                                                  int gval) {
  require(gval >= 1, "need g >= 1");
  require(!xs.empty(), "need at least one outside vertex");
  for (Vertex x : xs) {
    GapResult gr = gap(g, x, iv);
    if (gr.gap > gval) return GapBranch{x, *gr.witness};
  }

  auto mono = mono_interval(g, c, iv, xs, gval);
  if (!mono) return spine_pair(g, iv.lo);

  Interval shrunk = mono->interval;
  if (shrunk.size() == 1) {
    VertexPath solo;
    solo.seq = {shrunk.lo};
    return solo;
  }
  OrderedGraph sub = induced_subgraph(g, shrunk);
  auto local = shortest_increasing_path(sub, 1, sub.vertex_count());
  IPLAB_ASSERT(local.has_value(), "spine keeps the shrunken interval connected");
  VertexPath path = translate(*local, shrunk.lo - 1);
  IPLAB_ASSERT(verify_induced_increasing(g, path), "block walk must be induced");

  // With every matched vertex touching every block, no edge spans two block
  // gaps, and the walk must visit each block.
  int pb = std::max(1, shrunk.size() / gval);
  std::vector<Interval> blocks = split_interval(shrunk, pb);
  bool full_contact = true;
  for (int col = 1; col <= c.k && full_contact; ++col) {
    Vertex x = xs[static_cast<size_t>(mono->by_color[static_cast<size_t>(col) - 1])];
    for (const auto& blk : blocks) {
      if (!adjacent_to_interval(g, x, blk)) {
        full_contact = false;
        break;
      }
    }
  }
  if (full_contact) {
    IPLAB_ASSERT(path.size() >= pb, "block walk undercut its floor");
  }
  return path;
}

std::variant<VertexPath, TreeSurrounding> grow_surrounding(
    const OrderedGraph& g, const EdgeColoring& c, const TreeSurrounding& t,
    int gval, GrowthCase* note) {
  require(gval >= 1, "need g >= 1");
  for (const auto& tree : t.left) {
    require(tree.defects().empty(), "left tree malformed");
  }
  for (const auto& tree : t.right) {
    require(tree.defects().empty(), "right tree malformed");
  }
  require(verify_surrounding(g, c, t).empty(),
          "surrounding must satisfy all six conditions");

  // Smallest root with no neighbor in the interval.
  Vertex u = 0;
  Side side = Side::kLeft;
  int index = 0;
  auto consider = [&](const ColoredTree& tree, Side s, int i) {
    if (adjacent_to_interval(g, tree.root, t.mid)) return;
    if (u == 0 || tree.root < u) {
      u = tree.root;
      side = s;
      index = i;
    }
  };
  for (size_t i = 0; i < t.left.size(); ++i) {
    consider(t.left[i], Side::kLeft, static_cast<int>(i) + 1);
  }
  for (size_t i = 0; i < t.right.size(); ++i) {
    consider(t.right[i], Side::kRight, static_cast<int>(i) + 1);
  }
  IPLAB_ASSERT(u != 0, "a free root is guaranteed by the sixth condition");

  TreeSurrounding next = t;
  Interval target = t.mid;
  GrowthCase how;
  how.side = side;
  how.tree_index = index;

  if (side == Side::kLeft) {
    Vertex v = last_neighbor_below(g, u, t.mid.lo);
    IPLAB_ASSERT(v > u, "the spine successor sits between the root and the interval");
    int host = 0;
    for (size_t i = 0; i < t.left.size(); ++i) {
      if (t.left[i].contains(v)) host = static_cast<int>(i) + 1;
    }
    ColoredTree& grown = next.left[static_cast<size_t>(index) - 1];
    if (host == 0) {
      grown.nodes.insert(v);
      grown.parent[u] = v;
      grown.edge_color[{u, v}] = index;
      grown.root = v;
    } else {
      how.merged = true;
      Vertex fresh = 0;
      for (const auto& tree : t.left) {
        if (!tree.nodes.empty()) fresh = std::max(fresh, *tree.nodes.rbegin());
      }
      fresh += 1;
      bool taken = t.mid.contains(fresh);
      for (const auto& tree : t.left) taken = taken || tree.contains(fresh);
      for (const auto& tree : t.right) taken = taken || tree.contains(fresh);
      if (taken) {
        throw DegenerateSurrounding("fresh position " + std::to_string(fresh) +
                                    " is already occupied");
      }
      ColoredTree& into = next.left[static_cast<size_t>(host) - 1];
      into.nodes.insert(grown.nodes.begin(), grown.nodes.end());
      into.parent.insert(grown.parent.begin(), grown.parent.end());
      into.edge_color.insert(grown.edge_color.begin(), grown.edge_color.end());
      into.parent[u] = v;
      into.edge_color[{u, v}] = index;
      grown = ColoredTree::single(fresh, Side::kLeft);
      if (t.mid.lo + 1 > t.mid.hi) return spine_pair(g, t.mid.lo);
      target = Interval{t.mid.lo + 1, t.mid.hi};
    }
  } else {
    Vertex v = first_neighbor_above(g, u, t.mid.hi);
    IPLAB_ASSERT(v != 0 && v < u,
                 "the spine predecessor sits between the interval and the root");
    int host = 0;
    for (size_t i = 0; i < t.right.size(); ++i) {
      if (t.right[i].contains(v)) host = static_cast<int>(i) + 1;
    }
    ColoredTree& grown = next.right[static_cast<size_t>(index) - 1];
    if (host == 0) {
      grown.nodes.insert(v);
      grown.parent[u] = v;
      grown.edge_color[{u, v}] = t.p + index;
      grown.root = v;
    } else {
      how.merged = true;
      Vertex fresh = 0;
      for (const auto& tree : t.right) {
        if (!tree.nodes.empty()) {
          Vertex lo = *tree.nodes.begin();
          fresh = fresh == 0 ? lo : std::min(fresh, lo);
        }
      }
      fresh -= 1;
      bool taken = t.mid.contains(fresh);
      for (const auto& tree : t.left) taken = taken || tree.contains(fresh);
      for (const auto& tree : t.right) taken = taken || tree.contains(fresh);
      if (taken) {
        throw DegenerateSurrounding("fresh position " + std::to_string(fresh) +
                                    " is already occupied");
      }
      ColoredTree& into = next.right[static_cast<size_t>(host) - 1];
      into.nodes.insert(grown.nodes.begin(), grown.nodes.end());
      into.parent.insert(grown.parent.begin(), grown.parent.end());
      into.edge_color.insert(grown.edge_color.begin(), grown.edge_color.end());
      into.parent[u] = v;
      into.edge_color[{u, v}] = t.p + index;
      grown = ColoredTree::single(fresh, Side::kRight);
      if (t.mid.lo > t.mid.hi - 1) return spine_pair(g, t.mid.lo);
      target = Interval{t.mid.lo, t.mid.hi - 1};
    }
  }

  std::vector<Vertex> roots;
  roots.reserve(next.left.size() + next.right.size());
  for (const auto& tree : next.left) roots.push_back(tree.root);
  for (const auto& tree : next.right) roots.push_back(tree.root);

  auto r = gap_k_or_path(g, c, target, roots, gval);
  if (std::holds_alternative<VertexPath>(r)) return std::get<VertexPath>(r);

  next.mid = std::get<GapBranch>(r).witness;
  IPLAB_ASSERT(next.mid.size() >= gval, "witness smaller than the schedule");
  IPLAB_ASSERT(next.total_size() == t.total_size() + 1,
               "growth must add exactly one node");
  IPLAB_ASSERT(verify_surrounding(g, c, next).empty(),
               "growth broke a surrounding condition");
  if (note != nullptr) *note = how;
  return next;
}

PathReport extract_knc(const OrderedGraph& g, const EdgeColoring& c, int k,
                       SurroundingAudit* audit) {
  int n = g.vertex_count();
  require(k >= 1, "need k >= 1");
  require(g.has_increasing_ham_path(),
          "graph must carry the increasing Hamiltonian path");
  require(c.k == k, "certificate must have exactly k classes");
  require(verify_partition(g, c), "certificate classes must be crossing-free");

  PathReport report;
  report.n = n;
  if (n == 1) {
    report.method = Method::kLifting;
    report.path.seq = {1};
    report.guarantee = 1;
    return report;
  }

  auto walk = shortest_increasing_path(g, 1, n);
  IPLAB_ASSERT(walk.has_value(), "spine connects 1 to n");

  int p = (k + 1) / 2;
  auto schedule = [&](int t) -> std::int64_t {
    double lg = std::log2(static_cast<double>(n));
    if (lg <= 0.0) return 0;
    return static_cast<std::int64_t>(
        std::floor(static_cast<double>(n) / (2.0 * std::pow(lg, t + 1)) + 1e-9));
  };

  std::optional<TreeSurrounding> sur;
  std::optional<VertexPath> branch_path;
  int steps = 0;
  std::int64_t g0 = schedule(0);

  if (n >= k + 1 && g0 >= 1) {
    Interval whole{p + 1, n - (k - p)};
    TreeSurrounding init;
    init.k = k;
    init.p = p;
    for (int i = 1; i <= p; ++i) {
      init.left.push_back(ColoredTree::single(i, Side::kLeft));
    }
    for (int j = 1; j <= k - p; ++j) {
      init.right.push_back(ColoredTree::single(n - j + 1, Side::kRight));
    }
    std::vector<Vertex> roots;
    for (const auto& tree : init.left) roots.push_back(tree.root);
    for (const auto& tree : init.right) roots.push_back(tree.root);

    auto first = gap_k_or_path(g, c, whole, roots, static_cast<int>(g0));
    if (std::holds_alternative<VertexPath>(first)) {
      branch_path = std::get<VertexPath>(first);
      report.trace.push_back({0, whole.size(), static_cast<int>(g0), "path"});
      if (audit != nullptr) {
        audit->steps.push_back(
            {0, whole.size(), static_cast<int>(g0), init.sizes(), "path"});
      }
    } else {
      init.mid = std::get<GapBranch>(first).witness;
      report.trace.push_back({0, init.mid.size(), static_cast<int>(g0), "gap"});
      if (audit != nullptr) {
        audit->steps.push_back(
            {0, init.mid.size(), static_cast<int>(g0), init.sizes(), "gap"});
      }
      IPLAB_ASSERT(verify_surrounding(g, c, init).empty(),
                   "initial surrounding malformed");
      sur = std::move(init);
    }

    while (sur) {
      std::int64_t gt = schedule(steps + 1);
      if (gt < 1) break;
      GrowthCase how;
      try {
        auto r = grow_surrounding(g, c, *sur, static_cast<int>(gt), &how);
        if (std::holds_alternative<VertexPath>(r)) {
          branch_path = std::get<VertexPath>(r);
          report.trace.push_back(
              {steps + 1, sur->mid.size(), static_cast<int>(gt), "path"});
          if (audit != nullptr) {
            audit->steps.push_back({steps + 1, sur->mid.size(),
                                    static_cast<int>(gt), sur->sizes(), "path"});
          }
          break;
        }
        TreeSurrounding grown = std::get<TreeSurrounding>(std::move(r));
        steps += 1;
        std::string branch = std::string(how.merged ? "merge-" : "fresh-") +
                             (how.side == Side::kLeft ? "left" : "right");
        report.trace.push_back(
            {steps, grown.mid.size(), static_cast<int>(gt), branch});
        if (audit != nullptr) {
          audit->steps.push_back({steps, grown.mid.size(), static_cast<int>(gt),
                                  grown.sizes(), branch});
        }
        sur = std::move(grown);
      } catch (const DegenerateSurrounding&) {
        report.trace.push_back(
            {steps + 1, sur->mid.size(), static_cast<int>(gt), "degenerate"});
        if (audit != nullptr) {
          audit->steps.push_back({steps + 1, sur->mid.size(),
                                  static_cast<int>(gt), sur->sizes(),
                                  "degenerate"});
        }
        break;
      }
    }
  }

  report.iterations = steps;

  VertexPath best;
  Method best_method = Method::kLifting;
  auto offer = [&](const VertexPath& cand, Method m) {
    if (cand.size() > best.size()) {
      best = cand;
      best_method = m;
    }
  };
  if (branch_path) offer(*branch_path, Method::kGapShortcut);

  std::int64_t certified = 0;
  if (sur) {
    const ColoredTree* largest = nullptr;
    for (const auto& tree : sur->left) {
      if (largest == nullptr || tree.size() > largest->size()) largest = &tree;
    }
    for (const auto& tree : sur->right) {
      if (largest == nullptr || tree.size() > largest->size()) largest = &tree;
    }
    IPLAB_ASSERT(largest != nullptr, "surrounding keeps k trees");
    IPLAB_ASSERT(static_cast<std::int64_t>(largest->size()) * k >=
                     sur->total_size(),
                 "largest tree below the average");
    int budget = side_colors(*sur, largest->side);
    IPLAB_ASSERT(largest->size() <= tree_size_bound(largest->depth(), budget),
                 "tree exceeded its cutwidth ceiling");
    VertexPath deep = largest->deepest_path();
    IPLAB_ASSERT(verify_induced_increasing(g, deep),
                 "root-to-leaf walk must be induced");
    // The strict form of the depth floor: depth exceeds
    // 1 - budget + (budget/e) * size^(1/budget).
    double strict = 1.0 - budget +
                    (budget / std::numbers::e) *
                        std::pow(static_cast<double>(largest->size()),
                                 1.0 / budget);
    certified = std::max<std::int64_t>(
        1, static_cast<std::int64_t>(std::floor(strict)) + 1);
    offer(deep, Method::kTripleLoop);
  }
  offer(*walk, Method::kLifting);

  if (certified == 0) certified = std::min<std::int64_t>(2, best.size());
  report.guarantee = certified;
  report.method = best_method;
  report.path = best;
  IPLAB_ASSERT(verify_induced_increasing(g, report.path),
               "extracted path failed validation");
  IPLAB_ASSERT(report.path.size() >= report.guarantee,
               "path shorter than its certificate");
  return report;
}

std::int64_t tree_size_bound(int depth, int colors) {
  require(depth >= 0 && colors >= 0, "need nonnegative arguments");
  if (depth == 0) return 0;
  long long top = static_cast<long long>(depth) + colors - 1;
  long long r = std::min<long long>(colors, depth - 1);
  unsigned __int128 acc = 1;
  const auto cap = static_cast<unsigned __int128>(INT64_MAX);
  for (long long i = 1; i <= r; ++i) {
    acc = acc * static_cast<unsigned __int128>(top - r + i) /
          static_cast<unsigned __int128>(i);
    // The partial values only grow while i stays below top/2, so the first
    // overflow already decides the result.
    if (acc > cap) return INT64_MAX;
  }
  return static_cast<std::int64_t>(acc);
}

double depth_lower_bound(std::int64_t size, int p) {
  require(size >= 1, "need size >= 1");
  require(p >= 1, "need p >= 1");
  return 2.0 - p +
         (p / std::numbers::e) * std::pow(static_cast<double>(size), 1.0 / p);
}

}  // namespace iplab
