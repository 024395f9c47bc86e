#include <algorithm>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "glue.hpp"
#include "hamsq/blocks.hpp"
#include "hamsq/engine.hpp"
#include "hamsq/error.hpp"

namespace hamsq {

namespace {

using detail::Piece;

std::string name(Vertex v) { return "#" + std::to_string(v.id); }

Vertex min_non_cut(const BlockDecomposition& bd, std::size_t block, std::optional<Vertex> avoid = {}) {
  for (Vertex v : bd.block(block)) {
    if (!bd.is_cut_vertex(v) && v != avoid) return v;
  }
  throw Error(ErrorCode::kConstructionDefect, "endblock without a free vertex");
}

void check_count(const HamCycle& c, Vertex v, int expected, const char* what) {
  const int got = c.in_g_count(v);
  if (got != expected) {
    throw Error(ErrorCode::kConstructionDefect, std::string(what) + ": " + name(v) + " has " + std::to_string(got) +
                                                    " graph edges on the cycle, expected " +
                                                    std::to_string(expected));
  }
}

class Builder {
 public:
  Builder(const Graph& top, const EngineOptions& options, std::vector<TraceStep>* trace)
      : options_(options), trace_(trace), next_(top.order() ? top.max_vertex().id + 1 : 0) {}

  Piece path_cycle(const Graph& g, Vertex u1, Vertex u2);
  Piece branch_cycle(const Graph& g, Vertex a);
  Piece in_class(const Graph& g);

 private:
  Vertex fresh() {
    if (next_ == std::numeric_limits<std::uint32_t>::max()) {
      throw Error(ErrorCode::kFreshLabelCollision, "vertex identifiers exhausted");
    }
    return Vertex{next_++};
  }

  void record(std::string step, Vertex x, std::vector<std::size_t> sizes) {
    if (trace_) trace_->push_back(TraceStep{std::move(step), x, std::move(sizes)});
  }

  Piece anchored(const Graph& b, Vertex y, Vertex z) {
    Piece p{b, anchored_block_cycle(b, y, z, options_)};
    record("anchored-block", y, {b.order()});
    return p;
  }

  Piece merge(const Piece& p1, const Piece& p2, Vertex x, const std::set<Vertex>& keep) {
    const int c1 = p1.cycle.in_g_count(x);
    const int c2 = p2.cycle.in_g_count(x);
    Piece out = detail::glue_merge(p1, p2, x, detail::pick_partner(p1, x, keep), detail::pick_partner(p2, x, keep));
    record("merge:" + std::to_string(c1) + "+" + std::to_string(c2), x, {p1.graph.order(), p2.graph.order()});
    return out;
  }

  Piece pendant(const Piece& p, Vertex x, Vertex u, const std::set<Vertex>& keep) {
    const int c = p.cycle.in_g_count(x);
    Piece out = detail::glue_pendant(p, x, detail::pick_partner(p, x, keep), u);
    record("pendant:" + std::to_string(c), x, {p.graph.order(), 2});
    return out;
  }

  // Leg hanging at `a`, where `a` is a non-cut vertex of an endblock.
  Piece leg_cycle(const Graph& h, Vertex a) {
    const BlockDecomposition bd = decompose(h);
    if (bd.block_count() == 1) {
      const Vertex other = h.vertex(h.vertex(0) == a ? 1 : 0);
      return anchored(h, a, other);
    }
    for (std::size_t b = 0; b < bd.block_count(); ++b) {
      if (bd.info(b).end_status != EndStatus::kEndBlock) continue;
      if (std::binary_search(bd.block(b).begin(), bd.block(b).end(), a)) continue;
      return path_cycle(h, a, min_non_cut(bd, b, a));
    }
    throw Error(ErrorCode::kConstructionDefect, "leg at " + name(a) + " has no far endblock");
  }

  Piece build(const Graph& g, Vertex mark);
  Piece attach(const Piece& cur, const Graph& side, Vertex m, const std::set<Vertex>& keep);
  Piece main_step(const Graph& g, const BlockDecomposition& bd);

  const EngineOptions& options_;
  std::vector<TraceStep>* trace_;
  std::uint32_t next_;
};

Piece Builder::path_cycle(const Graph& g, Vertex u1, Vertex u2) {
  if (g.order() < 3) throw Error(ErrorCode::kTooSmall, "need at least 3 vertices");
  const BlockDecomposition bd = decompose(g);
  if (is_subdivided_star(bd).shape != BlockGraphShape::kPath) {
    throw Error(ErrorCode::kBlockGraphNotPath, "block graph is not a path");
  }
  if (!g.contains(u1) || !g.contains(u2) || u1 == u2) {
    throw Error(ErrorCode::kBadAnchors, "anchors must be two distinct vertices of the graph");
  }
  const std::size_t k = bd.block_count();
  if (k == 1) return anchored(g, u1, u2);

  if (bd.is_cut_vertex(u1) || bd.is_cut_vertex(u2)) throw Error(ErrorCode::kBadAnchors, "anchor is a cut vertex");
  const std::size_t first = bd.blocks_containing(u1).front();
  const std::size_t last = bd.blocks_containing(u2).front();
  if (first == last || bd.info(first).end_status != EndStatus::kEndBlock ||
      bd.info(last).end_status != EndStatus::kEndBlock) {
    throw Error(ErrorCode::kBadAnchors, "anchors must lie in distinct endblocks");
  }

  // blocks[i] joins junction[i] and junction[i+1]; the ends are the anchors.
  const auto nodes = bd.node_path(bd.node_of_block(first), bd.node_of_block(last));
  std::vector<std::size_t> blocks;
  std::vector<Vertex> junction{u1};
  for (int node : nodes) {
    if (bd.is_block_node(node)) {
      blocks.push_back(static_cast<std::size_t>(node));
    } else {
      junction.push_back(bd.cut_of_node(node));
    }
  }
  junction.push_back(u2);

  std::size_t c = k;
  for (std::size_t i = 0; i < k && c == k; ++i) {
    if (bd.info(blocks[i]).kind == BlockKind::kCyclic) c = i;
  }

  Piece cur;
  if (c == k) {
    // A path: odd positions outward, even positions back.
    std::vector<Vertex> order{junction[0]};
    for (std::size_t i = 1; i <= k; i += 2) order.push_back(junction[i]);
    const std::size_t top = k % 2 == 0 ? k : k - 1;
    for (std::size_t i = top; i >= 2; i -= 2) order.push_back(junction[i]);
    cur = Piece{g, HamCycle::from_order(g, std::move(order))};
    record("path-zigzag", u1, {g.order()});
  } else {
    auto keep_after = [&](std::size_t i) {
      std::set<Vertex> keep{u1, u2};
      for (std::size_t j = i + 1; j < junction.size(); ++j) keep.insert(junction[j]);
      return keep;
    };
    Vertex y;
    Vertex z;
    if (c == 0) {
      y = u1;
      z = junction[1];
    } else if (c == k - 1) {
      y = u2;
      z = junction[k - 1];
    } else {
      y = junction[c + 1];
      z = junction[c];
    }
    cur = anchored(block_subgraph(g, bd, blocks[c]), y, z);
    const auto back_keep = keep_after(c);
    for (std::size_t i = c; i-- > 0;) cur = pendant(cur, junction[i + 1], junction[i], back_keep);
    for (std::size_t i = c + 1; i < k; ++i) {
      const Vertex x = junction[i];
      const Vertex far = junction[i + 1];
      if (bd.info(blocks[i]).kind == BlockKind::kCyclic) {
        Piece q = anchored(block_subgraph(g, bd, blocks[i]), far, x);
        cur = merge(cur, q, x, keep_after(i));
      } else {
        cur = pendant(cur, x, far, keep_after(i));
      }
    }
  }
  check_count(cur.cycle, u1, bd.info(first).kind == BlockKind::kCyclic ? 2 : 1, "block path");
  check_count(cur.cycle, u2, bd.info(last).kind == BlockKind::kCyclic ? 2 : 1, "block path");
  return cur;
}

Piece Builder::branch_cycle(const Graph& g, Vertex a) {
  if (!g.contains(a)) throw Error(ErrorCode::kVertexNotFound, name(a));
  const BlockDecomposition bd = decompose(g);
  const auto shape = is_subdivided_star(bd);
  if (shape.shape != BlockGraphShape::kStarAtCut || *shape.center_cut != a) {
    throw Error(ErrorCode::kPreconditionViolated, "block graph is not a subdivided star centered at " + name(a));
  }
  const std::size_t t = t_count(bd, a);
  if (t > 2) {
    throw Error(ErrorCode::kPreconditionViolated, name(a) + " lies in " + std::to_string(t) + " acyclic non-end blocks");
  }

  const Vertex self[] = {a};
  std::vector<Graph> cyclic;
  std::vector<Graph> acyclic;
  std::vector<Vertex> leaves;
  for (auto comp : connected_components(without(g, self))) {
    comp.push_back(a);
    Graph h = induced(g, comp);
    if (h.order() == 2) {
      leaves.push_back(comp.front());
    } else if (h.degree(a) >= 2) {
      cyclic.push_back(std::move(h));
    } else {
      acyclic.push_back(std::move(h));
    }
  }
  const std::set<Vertex> keep{a};

  Piece cur;
  std::size_t next_acyclic = 0;
  if (!cyclic.empty()) {
    cur = leg_cycle(cyclic.front(), a);
    for (std::size_t i = 1; i < cyclic.size(); ++i) cur = merge(cur, leg_cycle(cyclic[i], a), a, keep);
    for (Vertex leaf : leaves) cur = pendant(cur, a, leaf, keep);
  } else if (leaves.size() >= 2) {
    std::vector<Vertex> order{a};
    order.insert(order.end(), leaves.begin(), leaves.end());
    Graph star = induced(g, order);
    cur = Piece{star, HamCycle::from_order(star, order)};
    record("leaf-star", a, {star.order()});
  } else if (leaves.size() == 1 && !acyclic.empty()) {
    cur = leg_cycle(acyclic.front(), a);
    next_acyclic = 1;
    cur = pendant(cur, a, leaves.front(), keep);
  } else {
    throw Error(ErrorCode::kPreconditionViolated, "too many acyclic non-end blocks at " + name(a));
  }
  for (std::size_t i = next_acyclic; i < acyclic.size(); ++i) cur = merge(cur, leg_cycle(acyclic[i], a), a, keep);
  check_count(cur.cycle, a, 2 - static_cast<int>(t), "single branch point");
  return cur;
}

Piece Builder::in_class(const Graph& g) {
  if (g.order() < 3) throw Error(ErrorCode::kTooSmall, "need at least 3 vertices");
  const BlockDecomposition bd = decompose(g);
  const PreconditionReport pre = check_main_preconditions(bd);
  if (!pre.in_class) throw Error(ErrorCode::kPreconditionViolated, pre.reason);
  const auto points = bd.branch_points();
  for (Vertex b : points) {
    if (t_count(bd, b) > 2) {
      throw Error(ErrorCode::kPreconditionViolated, name(b) + " lies in more than two acyclic non-end blocks");
    }
  }

  Piece out;
  if (points.empty()) {
    if (bd.block_count() == 1) {
      out = anchored(g, g.vertex(0), g.vertex(1));
    } else {
      std::vector<Vertex> ends;
      for (std::size_t b = 0; b < bd.block_count(); ++b) {
        if (bd.info(b).end_status == EndStatus::kEndBlock) ends.push_back(min_non_cut(bd, b));
      }
      std::sort(ends.begin(), ends.end());
      out = path_cycle(g, ends.front(), ends.back());
    }
  } else if (points.size() == 1) {
    out = branch_cycle(g, points.front());
  } else {
    out = main_step(g, bd);
  }
  for (Vertex b : points) check_count(out.cycle, b, 2 - static_cast<int>(t_count(bd, b)), "branch point");
  return out;
}

Piece Builder::main_step(const Graph& g, const BlockDecomposition& bd) {
  const auto points = bd.branch_points();
  std::vector<std::vector<int>> dist;
  int diameter = 0;
  for (Vertex b : points) {
    auto d = bd.node_distances(bd.node_of_cut(b));
    for (Vertex c : points) diameter = std::max(diameter, d[static_cast<std::size_t>(bd.node_of_cut(c))]);
    dist.push_back(std::move(d));
  }
  auto is_point = [&](int node) { return !bd.is_block_node(node) && bd.node_degree(node) >= 3; };

  std::optional<std::pair<Vertex, Vertex>> chosen;
  for (std::size_t i = 0; i < points.size() && !chosen; ++i) {
    bool extreme = false;
    for (Vertex c : points) extreme = extreme || dist[i][static_cast<std::size_t>(bd.node_of_cut(c))] == diameter;
    if (!extreme) continue;
    for (std::size_t j = 0; j < points.size() && !chosen; ++j) {
      if (j == i) continue;
      const auto path = bd.node_path(bd.node_of_cut(points[i]), bd.node_of_cut(points[j]));
      bool clear = true;
      for (std::size_t p = 1; p + 1 < path.size(); ++p) clear = clear && !is_point(path[p]);
      if (clear) chosen = std::make_pair(points[i], points[j]);
    }
  }
  if (!chosen) throw Error(ErrorCode::kConstructionDefect, "no pair of adjacent branch points");
  const auto [a1, a2] = *chosen;

  std::vector<Vertex> core;
  for (int node : bd.node_path(bd.node_of_cut(a1), bd.node_of_cut(a2))) {
    if (!bd.is_block_node(node)) continue;
    const auto& blk = bd.block(static_cast<std::size_t>(node));
    core.insert(core.end(), blk.begin(), blk.end());
  }
  std::sort(core.begin(), core.end());
  core.erase(std::unique(core.begin(), core.end()), core.end());
  const Graph h = induced(g, core);

  std::vector<Vertex> interior;
  for (Vertex v : core) {
    if (v != a1 && v != a2) interior.push_back(v);
  }
  const Graph rest = without(g, interior);
  Graph side1;
  Graph side2;
  for (const auto& comp : connected_components(rest)) {
    if (std::binary_search(comp.begin(), comp.end(), a1)) side1 = induced(g, comp);
    if (std::binary_search(comp.begin(), comp.end(), a2)) side2 = induced(g, comp);
  }

  const std::set<Vertex> keep(points.begin(), points.end());
  Piece cur = path_cycle(h, a1, a2);
  cur = attach(cur, side2, a2, keep);
  cur = attach(cur, side1, a1, keep);
  return cur;
}

Piece Builder::attach(const Piece& cur, const Graph& side, Vertex m, const std::set<Vertex>& keep) {
  const BlockDecomposition bd = decompose(side);
  if (t_count(bd, m) <= 1) return merge(cur, build(side, m), m, keep);

  // Two acyclic non-end blocks at m: split off the leg through the first one.
  std::optional<Vertex> far;
  for (std::size_t b : bd.blocks_containing(m)) {
    const BlockInfo& info = bd.info(b);
    if (info.kind == BlockKind::kAcyclic && info.end_status == EndStatus::kNonEndBlock) {
      far = bd.block(b)[0] == m ? bd.block(b)[1] : bd.block(b)[0];
      break;
    }
  }
  const Vertex self[] = {m};
  std::vector<Vertex> leg;
  for (const auto& comp : connected_components(without(side, self))) {
    if (std::binary_search(comp.begin(), comp.end(), *far)) leg = comp;
  }
  const Graph rest = without(side, leg);
  leg.push_back(m);
  const Graph split = induced(side, leg);
  Piece out = merge(cur, build(rest, m), m, keep);
  return merge(out, build(split, m), m, keep);
}

// The piece's graph is made a branch point at `mark` by pendant leaves,
// solved, and the leaves are spliced out again.
Piece Builder::build(const Graph& g, Vertex mark) {
  Graph h = g;
  const std::size_t blocks = decompose(g).blocks_containing(mark).size();
  std::vector<Vertex> leaves;
  for (std::size_t i = blocks; i < 3; ++i) {
    const Vertex leaf = fresh();
    h = add_pendant(h, mark, leaf);
    leaves.push_back(leaf);
  }
  Piece p = in_class(h);
  for (auto it = leaves.rbegin(); it != leaves.rend(); ++it) {
    p = detail::strip_pendant(p, *it, mark);
    record("strip-pendant", mark, {p.graph.order()});
  }
  return p;
}

}  // namespace

HamCycle block_path_cycle(const Graph& g, Vertex u1, Vertex u2, const EngineOptions& options,
                          std::vector<TraceStep>* trace) {
  Builder b(g, options, trace);
  return b.path_cycle(g, u1, u2).cycle;
}

HamCycle single_branch_cycle(const Graph& g, Vertex a, const EngineOptions& options, std::vector<TraceStep>* trace) {
  Builder b(g, options, trace);
  return b.branch_cycle(g, a).cycle;
}

HamCycle construct_in_class(const Graph& g, const EngineOptions& options, std::vector<TraceStep>* trace) {
  Builder b(g, options, trace);
  return b.in_class(g).cycle;
}

}  // namespace hamsq
