#pragma once

#include <optional>
#include <set>

#include "hamsq/engine.hpp"
#include "hamsq/graph.hpp"
#include "hamsq/search.hpp"

namespace hamsq::detail {

// A graph together with a hamiltonian cycle of its square.
struct Piece {
  Graph graph;
  HamCycle cycle;
};

// Cycle-neighbor b of x with xb an edge of the piece's graph. Prefers
// neighbors outside `keep`, then the smallest. Throws kWitnessMismatch.
Vertex pick_partner(const Piece& p, Vertex x, const std::set<Vertex>& keep = {});

// First cycle edge (in canonical edge order) joining two G-neighbors of x.
std::optional<Edge> first_neighbor_edge(const Piece& p, Vertex x);

// The pieces share exactly the vertex x; a1 and b1 are partners of x on
// each side. Drops x-a1 and x-b1 and joins a1-b1.
Piece glue_merge(const Piece& p1, const Piece& p2, Vertex x, Vertex a1, Vertex b1);

// Adds the pendant edge x-u. y is a partner of x; x-y is replaced by y-u-x.
Piece glue_pendant(const Piece& p, Vertex x, Vertex y, Vertex u);

// Adds the pendant edge x-u, inserting u into the cycle edge yw whose ends
// are both G-neighbors of x.
Piece glue_pendant_cross(const Piece& p, Vertex x, Edge yw, Vertex u);

// p1 has the cycle edge yw with y, w G-neighbors of x; p2 has both cycle
// edges at x in its graph. Drops y-w and x's edges in p2.
Piece glue_cross(const Piece& p1, const Piece& p2, Vertex x, Edge yw);

// Search that surfaces kBudgetExceeded as an Error.
std::optional<HamCycle> search(const Graph& g, const CycleConstraint& c, const EngineOptions& options);

void require_within_cap(const Graph& g, const EngineOptions& options, const char* what);
void require_two_connected(const Graph& b);

// Removes `leaf` (attached at `at`) and joins its two cycle neighbors.
Piece strip_pendant(const Piece& piece, Vertex leaf, Vertex at);

}  // namespace hamsq::detail
