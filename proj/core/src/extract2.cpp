#include "iplab/extract2.hpp"

#include <algorithm>
#include <cmath>

namespace iplab {

namespace {

constexpr int kFullVerifyLimit = 2048;

VertexPath translate(VertexPath p, Vertex offset) {
  for (Vertex& v : p.seq) v += offset;
  return p;
}

}  // namespace

std::string method_name(Method m) {
  switch (m) {
    case Method::kGapShortcut: return "gap-shortcut";
    case Method::kTripleLoop: return "triple-loop";
    case Method::kLifting: return "lifting";
    case Method::kOracle: return "oracle";
  }
  return "unknown";
}

int shrink_ratio(int n) {
  require(n >= 1, "vertex count must be >= 1");
  if (n <= 4) return 2;
  double ratio = std::log2(static_cast<double>(n)) /
                 std::log2(std::log2(static_cast<double>(n)));
  return std::max(2, static_cast<int>(std::ceil(ratio - 1e-9)));
}

std::vector<std::string> GoodTriple::violations(const OrderedGraph& g) const {
  std::vector<std::string> out;
  if (mid.lo > mid.hi) out.push_back("middle interval is empty");
  if (!(u < mid.lo)) out.push_back("left tip not left of the middle");
  if (!(mid.hi < v)) out.push_back("right tip not right of the middle");
  if (left.empty() || left.seq.back() != u) out.push_back("left flank must end at u");
  if (right.empty() || right.seq.front() != v) out.push_back("right flank must start at v");
  if (!verify_induced_increasing(g, left)) out.push_back("left flank not an induced increasing path");
  if (!verify_induced_increasing(g, right)) out.push_back("right flank not an induced increasing path");
  if (mid.lo <= mid.hi && mid.hi <= g.vertex_count()) {
    bool hole_u = !adjacent_to_interval(g, u, mid);
    bool hole_v = !adjacent_to_interval(g, v, mid);
    if (!hole_u && !hole_v) out.push_back("neither tip ignores the middle");
    for (size_t i = 0; i + 1 < left.seq.size(); ++i) {
      if (adjacent_to_interval(g, left.seq[i], mid)) {
        out.push_back("left flank interior touches the middle");
        break;
      }
    }
    for (size_t i = 1; i < right.seq.size(); ++i) {
      if (adjacent_to_interval(g, right.seq[i], mid)) {
        out.push_back("right flank interior touches the middle");
        break;
      }
    }
  }
  return out;
}

std::variant<VertexPath, GapBranch> gap_or_path(const OrderedGraph& g, Vertex u,
                                                Interval iv, Vertex v, int gval) {
  require(gval >= 1, "need g >= 1");
  require(u < iv.lo && iv.hi < v, "need u < interval < v");
  require(g.has_increasing_ham_path(), "graph must carry the increasing Hamiltonian path");

  GapResult gu = gap(g, u, iv);
  if (gu.gap >= gval) return GapBranch{u, *gu.witness};
  GapResult gv = gap(g, v, iv);
  if (gv.gap >= gval) return GapBranch{v, *gv.witness};

  int blocks_count = iv.size() / gval;
  if (blocks_count < 4) {
    // Degenerate block count: a two-vertex walk already meets the bound.
    VertexPath trivial;
    trivial.seq = {iv.lo, iv.lo + 1};
    IPLAB_ASSERT(verify_induced_increasing(g, trivial), "spine step must be induced");
    return trivial;
  }

  std::vector<Interval> blocks = split_interval(iv, blocks_count);
  Interval region{blocks[1].lo, blocks[static_cast<size_t>(blocks_count) - 2].hi};
  OrderedGraph sub = induced_subgraph(g, region);
  auto local = shortest_increasing_path(sub, 1, sub.vertex_count());
  IPLAB_ASSERT(local.has_value(), "spine keeps the middle region connected");
  VertexPath path = translate(*local, region.lo - 1);
  IPLAB_ASSERT(verify_induced_increasing(g, path), "middle walk must be induced");

  // Both probes hit every full-size block only when each block really is
  // large enough; the p-2 floor is certified exactly in that regime.
  bool every_block_hit = true;
  for (int i = 1; i + 1 < blocks_count && every_block_hit; ++i) {
    every_block_hit = adjacent_to_interval(g, u, blocks[static_cast<size_t>(i)]) &&
                      adjacent_to_interval(g, v, blocks[static_cast<size_t>(i)]);
  }
  if (every_block_hit) {
    IPLAB_ASSERT(path.size() >= blocks_count - 2,
                 "middle walk shorter than the block floor");
  }
  return path;
}

std::variant<VertexPath, GoodTriple> grow_triple(const OrderedGraph& g,
                                                 const GoodTriple& t, int gval) {
  bool hole_u = !adjacent_to_interval(g, t.u, t.mid);
  bool hole_v = !adjacent_to_interval(g, t.v, t.mid);
  require(hole_u || hole_v, "triple lost its free tip");

  if (hole_u) {
    Vertex grown = last_neighbor_below(g, t.u, t.mid.lo);
    IPLAB_ASSERT(grown > t.u, "the spine successor guarantees a below-middle neighbor");
    auto r = gap_or_path(g, grown, t.mid, t.v, gval);
    if (std::holds_alternative<VertexPath>(r)) return std::get<VertexPath>(r);
    const GapBranch& b = std::get<GapBranch>(r);
    GoodTriple next;
    next.u = grown;
    next.v = t.v;
    next.mid = b.witness;
    next.left = t.left;
    next.left.seq.push_back(grown);
    next.right = t.right;
    IPLAB_ASSERT(next.size() == t.size() + 1, "growth must add exactly one vertex");
    return next;
  }

  Vertex grown = first_neighbor_above(g, t.v, t.mid.hi);
  IPLAB_ASSERT(grown != 0 && grown < t.v, "the spine predecessor guarantees an above-middle neighbor");
  auto r = gap_or_path(g, t.u, t.mid, grown, gval);
  if (std::holds_alternative<VertexPath>(r)) return std::get<VertexPath>(r);
  const GapBranch& b = std::get<GapBranch>(r);
  GoodTriple next;
  next.u = t.u;
  next.v = grown;
  next.mid = b.witness;
  next.left = t.left;
  next.right.seq.reserve(t.right.seq.size() + 1);
  next.right.seq.push_back(grown);
  next.right.seq.insert(next.right.seq.end(), t.right.seq.begin(), t.right.seq.end());
  IPLAB_ASSERT(next.size() == t.size() + 1, "growth must add exactly one vertex");
  return next;
}

PathReport extract_2nc(const OrderedGraph& g, const EdgeColoring& c,
                       GrowthAudit* audit) {
  int n = g.vertex_count();
  require(n >= 8, "need at least 8 positions");
  require(g.has_increasing_ham_path(), "graph must carry the increasing Hamiltonian path");
  require(c.k <= 2 && verify_partition(g, c),
          "certificate must split the edges into at most two crossing-free classes");

  int rho = shrink_ratio(n);
  PathReport report;
  report.n = n;

  std::optional<VertexPath> loop_path;
  std::optional<GoodTriple> triple;
  int steps = 0;

  Interval whole{2, n - 1};
  int g0 = std::max(1, whole.size() / rho);
  auto first = gap_or_path(g, 1, whole, n, g0);
  if (std::holds_alternative<VertexPath>(first)) {
    loop_path = std::get<VertexPath>(first);
    report.trace.push_back({0, whole.size(), g0, "path"});
  } else {
    const GapBranch& b = std::get<GapBranch>(first);
    GoodTriple t;
    t.u = 1;
    t.v = n;
    t.mid = b.witness;
    t.left.seq = {1};
    t.right.seq = {n};
    report.trace.push_back({0, whole.size(), g0, b.x == 1 ? "gap-u" : "gap-v"});
    IPLAB_ASSERT(t.violations(g).empty(), "initial triple malformed");
    triple = std::move(t);
  }

  while (triple) {
    IPLAB_ASSERT(steps <= n + 2, "growth loop overran the vertex budget");
    int gt = std::max(1, triple->mid.size() / rho);
    GrowthAudit::Step rec;
    rec.t = steps + 1;
    rec.size_before = triple->size();
    rec.interval_before = triple->mid.size();
    rec.g = gt;
    auto r = grow_triple(g, *triple, gt);
    if (std::holds_alternative<VertexPath>(r)) {
      loop_path = std::get<VertexPath>(r);
      rec.path_branch = true;
      rec.size_after = triple->size();
      rec.interval_after = 0;
      report.trace.push_back({rec.t, triple->mid.size(), gt, "path"});
      if (audit != nullptr) audit->steps.push_back(rec);
      break;
    }
    GoodTriple next = std::get<GoodTriple>(std::move(r));
    steps += 1;
    rec.size_after = next.size();
    rec.interval_after = next.mid.size();
    IPLAB_ASSERT(rec.size_after == rec.size_before + 1, "growth must add exactly one vertex");
    IPLAB_ASSERT(rec.interval_after >= rec.g, "shrunken middle fell below the schedule");
    if (n <= kFullVerifyLimit) {
      IPLAB_ASSERT(next.violations(g).empty(), "grown triple malformed");
    }
    report.trace.push_back(
        {rec.t, rec.interval_after, gt, next.u != triple->u ? "gap-u" : "gap-v"});
    if (audit != nullptr) audit->steps.push_back(rec);
    triple = std::move(next);
  }

  report.iterations = steps;
  report.guarantee = steps / 2;

  // Candidates in preference order on equal length.
  VertexPath best;
  Method best_method = Method::kLifting;
  auto offer = [&](const VertexPath& p, Method m) {
    if (p.size() > best.size()) {
      best = p;
      best_method = m;
    }
  };
  if (loop_path) offer(*loop_path, Method::kGapShortcut);
  if (triple) {
    const VertexPath& flank =
        triple->left.size() >= triple->right.size() ? triple->left : triple->right;
    offer(flank, Method::kTripleLoop);
  }
  if (auto walk = shortest_increasing_path(g, 1, n)) offer(*walk, Method::kLifting);

  IPLAB_ASSERT(verify_induced_increasing(g, best), "extracted path failed validation");
  IPLAB_ASSERT(best.size() >= report.guarantee, "path shorter than its certificate");
  report.path = std::move(best);
  report.method = best_method;
  return report;
}

std::variant<VertexPath, std::pair<Interval, EdgeColoring>> reduce_to_2nc(
    const OrderedGraph& g, int k_target) {
  require(k_target >= 1, "need k_target >= 1");
  require(g.has_increasing_ham_path(), "graph must carry the increasing Hamiltonian path");
  int n = g.vertex_count();
  require(n >= 2, "need at least one edge");

  Edge widest = g.edges().front();
  for (const auto& e : g.edges()) {
    if (e.second - e.first > widest.second - widest.first) widest = e;
  }
  std::int64_t span = widest.second - widest.first;
  if (span * k_target <= n - 1) {
    auto walk = shortest_increasing_path(g, 1, n);
    IPLAB_ASSERT(walk.has_value(), "spine connects 1 to n");
    // Every step advances at most span positions, so the walk needs at least
    // ceil((n-1)/span) >= k_target edges' worth of vertices.
    IPLAB_ASSERT(walk->size() >= k_target, "short-span walk undercut its floor");
    return *walk;
  }
  Interval iv{widest.first, widest.second};
  OrderedGraph sub = induced_subgraph(g, iv);
  EdgeColoring split = two_partition(sub);  // may throw NotTwoPartitionable
  return std::make_pair(iv, split);
}

PathReport extract_planar(const OrderedGraph& g) {
  int n = g.vertex_count();
  require(n >= 1, "vertex count must be >= 1");
  require(g.has_increasing_ham_path(), "graph must carry the increasing Hamiltonian path");
  if (n == 1) {
    PathReport r;
    r.n = 1;
    r.method = Method::kLifting;
    r.path.seq = {1};
    r.guarantee = 1;
    return r;
  }

  int k_target = (shrink_ratio(n) + 1) / 2;
  PathReport report;
  auto reduced = reduce_to_2nc(g, k_target);
  if (std::holds_alternative<VertexPath>(reduced)) {
    report.n = n;
    report.method = Method::kLifting;
    report.path = std::get<VertexPath>(reduced);
    report.guarantee = k_target;
  } else {
    auto& [iv, split] = std::get<std::pair<Interval, EdgeColoring>>(reduced);
    OrderedGraph sub = induced_subgraph(g, iv);
    if (sub.vertex_count() >= 8) {
      PathReport inner = extract_2nc(sub, split);
      report = std::move(inner);
      report.n = n;
      report.path = translate(report.path, iv.lo - 1);
    } else {
      auto walk = shortest_increasing_path(sub, 1, sub.vertex_count());
      IPLAB_ASSERT(walk.has_value(), "spine connects the span");
      report.n = n;
      report.method = Method::kLifting;
      report.path = translate(*walk, iv.lo - 1);
      report.guarantee = std::min(2, report.path.size());
    }
  }
  // The direct sparse walk is always available; keep the better result.
  if (auto walk = shortest_increasing_path(g, 1, n)) {
    if (walk->size() > report.path.size()) {
      report.path = *walk;
      report.method = Method::kLifting;
    }
  }
  IPLAB_ASSERT(verify_induced_increasing(g, report.path), "extracted path failed validation");
  IPLAB_ASSERT(report.path.size() >= report.guarantee, "path shorter than its certificate");
  return report;
}

PathReport extract_genus(const OrderedGraph& g, int genus) {
  require(genus >= 0, "need genus >= 0");
  int n = g.vertex_count();
  require(n >= 2 * (genus + 1), "order too small for this genus");

  std::vector<Interval> parts = split_interval(Interval{1, n}, genus + 1);
  std::optional<PathReport> best;
  std::vector<std::string> reasons;
  for (const auto& part : parts) {
    OrderedGraph sub = induced_subgraph(g, part);
    try {
      PathReport r = extract_planar(sub);
      r.n = n;
      r.path = translate(r.path, part.lo - 1);
      IPLAB_ASSERT(verify_induced_increasing(g, r.path),
                   "translated path failed validation");
      if (!best || r.path.size() > best->path.size()) best = std::move(r);
    } catch (const NotTwoPartitionable&) {
      reasons.push_back("interval [" + std::to_string(part.lo) + "," +
                        std::to_string(part.hi) + "] is not two-class splittable");
    }
  }
  if (!best) throw AllIntervalsFailed(std::move(reasons));
  return *best;
}

}  // namespace iplab
