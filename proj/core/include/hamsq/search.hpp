#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "hamsq/graph.hpp"

namespace hamsq {

/// What a vertex demands of its two cycle edges.
enum class Requirement {
  kFree,
  kBothInG,
  kExactlyOneInG,
  kAtLeastOneInG,
  kNoneInG,
  // Some cycle edge (anywhere) joins two G-neighbors of this vertex.
  kNeighborEdge,
};

struct CycleConstraint {
  std::map<Vertex, Requirement> requirements;
  std::set<Edge> required_edges;
  std::set<Edge> forbidden_edges;
  // Lower bound on the number of cycle edges that are edges of G.
  int min_in_g_edges = 0;

  CycleConstraint& require(Vertex v, Requirement r) {
    requirements[v] = r;
    return *this;
  }
  CycleConstraint& require_edge(Vertex a, Vertex b) {
    required_edges.insert(Edge::of(a, b));
    return *this;
  }
  CycleConstraint& forbid_edge(Vertex a, Vertex b) {
    forbidden_edges.insert(Edge::of(a, b));
    return *this;
  }
};

enum class SearchStatus { kFound, kNone, kBudgetExceeded };

struct SearchResult {
  SearchStatus status = SearchStatus::kNone;
  std::optional<HamCycle> cycle;
  std::uint64_t expansions = 0;
};

struct SearchOptions {
  static constexpr std::uint64_t kDefaultBudget = 50'000'000;

  std::uint64_t budget = kDefaultBudget;
  /// Optional extra predicate on complete cycles. When set, dead-state
  /// memoization is disabled and cycles are enumerated in canonical order
  /// until one is accepted.
  std::function<bool(const HamCycle&)> accept;
};

/// Exact search for a hamiltonian cycle of square(g) meeting `c`.
///
/// Extends a path from the minimum vertex, trying candidates in ascending
/// order and memoizing dead (visited-set, endpoint, local context) states.
/// The first cycle reached is the lexicographically smallest valid sequence,
/// which is already in canonical form. Disconnected inputs yield kNone.
///
/// Throws kTooSmall below 3 vertices, kConstraintOnMissingVertex, kBadParams
/// when an edge is both required and forbidden, and kSizeCapExceeded above
/// the kernel's 64-vertex word size.
SearchResult find_ham_cycle_constrained(const Graph& g, const CycleConstraint& c,
                                        const SearchOptions& options = {});

/// Convenience: unconstrained search; kBudgetExceeded surfaces as an Error.
std::optional<HamCycle> find_ham_cycle(const Graph& g, std::uint64_t budget = SearchOptions::kDefaultBudget);

}  // namespace hamsq
