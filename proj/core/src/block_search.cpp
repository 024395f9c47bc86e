#include <string>

#include "glue.hpp"
#include "hamsq/blocks.hpp"
#include "hamsq/engine.hpp"
#include "hamsq/error.hpp"

namespace hamsq {

namespace detail {

std::optional<HamCycle> search(const Graph& g, const CycleConstraint& c, const EngineOptions& options) {
  SearchOptions so;
  so.budget = options.budget;
  auto r = find_ham_cycle_constrained(g, c, so);
  if (r.status == SearchStatus::kBudgetExceeded) {
    throw Error(ErrorCode::kBudgetExceeded,
                "search budget of " + std::to_string(options.budget) + " expansions exhausted");
  }
  return std::move(r.cycle);
}

void require_within_cap(const Graph& g, const EngineOptions& options, const char* what) {
  if (g.order() > options.cap) {
    throw Error(ErrorCode::kSizeCapExceeded, std::string(what) + " has " + std::to_string(g.order()) +
                                                 " vertices; search cap is " + std::to_string(options.cap));
  }
}

void require_two_connected(const Graph& b) {
  if (b.order() < 3 || !is_connected(b) || decompose(b).block_count() != 1) {
    throw Error(ErrorCode::kNotTwoConnected, "graph is not 2-connected");
  }
}

}  // namespace detail

HamCycle anchored_block_cycle(const Graph& b, Vertex y, Vertex z, const EngineOptions& options) {
  if (!b.contains(y) || !b.contains(z)) throw Error(ErrorCode::kVertexNotFound, "anchor not in block");
  detail::require_two_connected(b);
  detail::require_within_cap(b, options, "block");

  std::optional<HamCycle> best;
  auto consider = [&](const CycleConstraint& c) {
    auto found = detail::search(b, c, options);
    if (found && (!best || std::lexicographical_compare(found->order().begin(), found->order().end(),
                                                        best->order().begin(), best->order().end()))) {
      best = std::move(found);
    }
  };
  if (y == z) {
    consider(CycleConstraint{}.require(y, Requirement::kBothInG));
  } else if (b.has_edge(y, z)) {
    // yz on the cycle: z needs a second edge of b; yz off the cycle: any edge of b at z.
    consider(CycleConstraint{}.require(y, Requirement::kBothInG).require(z, Requirement::kBothInG).require_edge(y, z));
    consider(CycleConstraint{}.require(y, Requirement::kBothInG).require(z, Requirement::kAtLeastOneInG).forbid_edge(y, z));
  } else {
    consider(CycleConstraint{}.require(y, Requirement::kBothInG).require(z, Requirement::kAtLeastOneInG));
  }
  if (!best) {
    throw Error(ErrorCode::kConstructionDefect,
                "no anchored cycle in a 2-connected block of " + std::to_string(b.order()) + " vertices");
  }
  return *best;
}

HamCycle four_edge_cycle(const Graph& b, const EngineOptions& options) {
  if (b.order() < 4) throw Error(ErrorCode::kTooSmall, "need at least 4 vertices");
  detail::require_two_connected(b);
  detail::require_within_cap(b, options, "block");
  CycleConstraint c;
  c.min_in_g_edges = 4;
  auto found = detail::search(b, c, options);
  if (!found) {
    throw Error(ErrorCode::kConstructionDefect,
                "no cycle with four graph edges in a 2-connected block of " + std::to_string(b.order()) + " vertices");
  }
  return *found;
}

}  // namespace hamsq
