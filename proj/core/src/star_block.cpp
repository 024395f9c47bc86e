#include <algorithm>
#include <set>
#include <string>

#include "glue.hpp"
#include "hamsq/blocks.hpp"
#include "hamsq/engine.hpp"
#include "hamsq/error.hpp"

namespace hamsq {

namespace {

using detail::Piece;

// Kuhn's augmenting paths: each cut vertex gets one of its cycle edges in the
// block, no edge used twice.
class EdgeMatcher {
 public:
  EdgeMatcher(const Graph& block, const HamCycle& cycle, const std::vector<Vertex>& cuts) : cuts_(cuts) {
    for (Vertex v : cuts) {
      auto [p, q] = cycle.neighbors(v);
      std::vector<int> opts;
      for (Vertex w : {p, q}) {
        if (!block.has_edge(v, w)) continue;
        const Edge e = Edge::of(v, w);
        auto it = std::find(edges_.begin(), edges_.end(), e);
        if (it == edges_.end()) {
          edges_.push_back(e);
          it = edges_.end() - 1;
        }
        opts.push_back(static_cast<int>(it - edges_.begin()));
      }
      options_.push_back(std::move(opts));
    }
    owner_.assign(edges_.size(), -1);
  }

  bool solve() {
    for (std::size_t i = 0; i < cuts_.size(); ++i) {
      std::vector<char> seen(edges_.size(), 0);
      if (!augment(static_cast<int>(i), seen)) return false;
    }
    return true;
  }

  std::vector<std::pair<Vertex, Vertex>> assignment() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (owner_[e] < 0) continue;
      const Vertex v = cuts_[static_cast<std::size_t>(owner_[e])];
      out.emplace_back(v, edges_[e].u == v ? edges_[e].v : edges_[e].u);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  bool augment(int i, std::vector<char>& seen) {
    for (int e : options_[static_cast<std::size_t>(i)]) {
      if (seen[static_cast<std::size_t>(e)]) continue;
      seen[static_cast<std::size_t>(e)] = 1;
      if (owner_[static_cast<std::size_t>(e)] < 0 || augment(owner_[static_cast<std::size_t>(e)], seen)) {
        owner_[static_cast<std::size_t>(e)] = i;
        return true;
      }
    }
    return false;
  }

  const std::vector<Vertex>& cuts_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> options_;
  std::vector<int> owner_;
};

std::vector<Vertex> cuts_in_block(const BlockDecomposition& bd, std::size_t b) {
  std::vector<Vertex> out;
  for (Vertex v : bd.block(b)) {
    if (bd.is_cut_vertex(v)) out.push_back(v);
  }
  return out;
}

HamCycle leg_cycle(const Graph& h, Vertex v, const EngineOptions& options, std::vector<TraceStep>* trace) {
  const BlockDecomposition bd = decompose(h);
  if (bd.block_count() == 1) {
    const Vertex other = h.vertex(h.vertex(0) == v ? 1 : 0);
    if (trace) trace->push_back(TraceStep{"anchored-block", v, {h.order()}});
    return anchored_block_cycle(h, v, other, options);
  }
  for (std::size_t b = 0; b < bd.block_count(); ++b) {
    const auto& blk = bd.block(b);
    if (bd.info(b).end_status != EndStatus::kEndBlock || std::binary_search(blk.begin(), blk.end(), v)) continue;
    for (Vertex u : blk) {
      if (!bd.is_cut_vertex(u)) return block_path_cycle(h, v, u, options, trace);
    }
  }
  throw Error(ErrorCode::kConstructionDefect, "leg without a far endblock");
}

}  // namespace

std::optional<AcceptableCycle> acceptable_cycle(const Graph& g, std::size_t center, const EngineOptions& options) {
  if (g.order() < 3) throw Error(ErrorCode::kWrongShape, "graph too small for a cyclic center block");
  const BlockDecomposition bd = decompose(g);
  if (center >= bd.block_count() || bd.info(center).kind != BlockKind::kCyclic) {
    throw Error(ErrorCode::kWrongShape, "center is not a cyclic block");
  }
  for (int node = 0; node < static_cast<int>(bd.node_count()); ++node) {
    if (node != bd.node_of_block(center) && bd.node_degree(node) > 2) {
      throw Error(ErrorCode::kWrongShape, "block graph is not a subdivided star around the center block");
    }
  }
  Graph block = block_subgraph(g, bd, center);
  detail::require_within_cap(block, options, "center block");
  const std::vector<Vertex> cuts = cuts_in_block(bd, center);

  CycleConstraint c;
  for (Vertex v : cuts) c.require(v, Requirement::kAtLeastOneInG);
  SearchOptions so;
  so.budget = options.budget;
  so.accept = [&](const HamCycle& cyc) { return EdgeMatcher(block, cyc, cuts).solve(); };
  auto r = find_ham_cycle_constrained(block, c, so);
  if (r.status == SearchStatus::kBudgetExceeded) {
    throw Error(ErrorCode::kBudgetExceeded, "search budget exhausted while enumerating cycles of the center block");
  }
  if (!r.cycle) return std::nullopt;
  EdgeMatcher m(block, *r.cycle, cuts);
  m.solve();
  return AcceptableCycle{center, block, *r.cycle, m.assignment()};
}

std::optional<AcceptableCycle> acceptable_cycle(const Graph& g, const EngineOptions& options) {
  if (g.order() < 3) throw Error(ErrorCode::kWrongShape, "graph too small for a cyclic center block");
  const BlockDecomposition bd = decompose(g);
  if (bd.block_count() == 1) return acceptable_cycle(g, 0, options);
  const ShapeReport shape = is_subdivided_star(bd);
  if (shape.shape != BlockGraphShape::kStarAtBlock) {
    throw Error(ErrorCode::kWrongShape, "block graph is " + to_string(shape.shape) + ", not a star centered at a block");
  }
  return acceptable_cycle(g, *shape.center_block, options);
}

HamCycle star_block_cycle(const Graph& g, const AcceptableCycle& ac, const EngineOptions& options,
                          std::vector<TraceStep>* trace) {
  const BlockDecomposition bd = decompose(g);
  if (ac.center_block >= bd.block_count() || bd.block(ac.center_block) != std::vector<Vertex>(ac.block.vertices().begin(), ac.block.vertices().end())) {
    throw Error(ErrorCode::kWitnessMismatch, "acceptable cycle does not belong to a block of the graph");
  }
  const std::vector<Vertex> cuts = cuts_in_block(bd, ac.center_block);
  bool ok = ac.cycle.size() == ac.block.order() && ac.assignment.size() == cuts.size();
  for (Vertex v : ac.cycle.order()) ok = ok && ac.block.contains(v);
  std::set<Edge> designated;
  std::set<Vertex> covered;
  for (auto [v, w] : ac.assignment) {
    ok = ok && ac.cycle.has_edge(v, w) && ac.block.has_edge(v, w) && bd.is_cut_vertex(v);
    ok = ok && designated.insert(Edge::of(v, w)).second && covered.insert(v).second;
  }
  if (!ok) throw Error(ErrorCode::kWitnessMismatch, "assignment is not a system of distinct cycle edges");

  Piece cur{ac.block, HamCycle::from_order(ac.block, {ac.cycle.order().begin(), ac.cycle.order().end()})};
  const auto& center = bd.block(ac.center_block);
  for (auto [v, w] : ac.assignment) {
    const Vertex self[] = {v};
    std::vector<Vertex> leg;
    for (const auto& comp : connected_components(without(g, self))) {
      const bool touches_center = std::any_of(comp.begin(), comp.end(), [&](Vertex u) {
        return std::binary_search(center.begin(), center.end(), u);
      });
      if (!touches_center) leg.insert(leg.end(), comp.begin(), comp.end());
    }
    leg.push_back(v);
    const Graph h = induced(g, leg);
    if (h.order() == 2) {
      const Vertex leaf = h.vertex(h.vertex(0) == v ? 1 : 0);
      const int c = cur.cycle.in_g_count(v);
      cur = detail::glue_pendant(cur, v, w, leaf);
      if (trace) trace->push_back(TraceStep{"pendant:" + std::to_string(c), v, {cur.graph.order() - 1, 2}});
    } else {
      Piece q{h, leg_cycle(h, v, options, trace)};
      const int c1 = cur.cycle.in_g_count(v);
      const int c2 = q.cycle.in_g_count(v);
      const std::size_t before = cur.graph.order();
      cur = detail::glue_merge(cur, q, v, w, detail::pick_partner(q, v));
      if (trace) {
        trace->push_back(TraceStep{"merge:" + std::to_string(c1) + "+" + std::to_string(c2), v, {before, h.order()}});
      }
    }
  }
  for (const Edge& e : ac.cycle.edges()) {
    if (!designated.count(e) && !cur.cycle.has_edge(e.u, e.v)) {
      throw Error(ErrorCode::kConstructionDefect, "an undesignated edge of the acceptable cycle was lost");
    }
  }
  if (cur.graph.order() != g.order()) throw Error(ErrorCode::kConstructionDefect, "legs do not cover the graph");
  return HamCycle::from_order(g, {cur.cycle.order().begin(), cur.cycle.order().end()});
}

}  // namespace hamsq
