#include <string>

#include "glue.hpp"
#include "hamsq/engine.hpp"
#include "hamsq/error.hpp"

namespace hamsq {

VertexType classify_vertex_type(const Graph& g, Vertex x, const EngineOptions& options) {
  if (!g.contains(x)) throw Error(ErrorCode::kVertexNotFound, "vertex #" + std::to_string(x.id));
  detail::require_within_cap(g, options, "graph");
  if (g.order() < 3 || !detail::search(g, CycleConstraint{}, options)) {
    throw Error(ErrorCode::kSquareNotHamiltonian, "square has no hamiltonian cycle");
  }
  VertexType t;
  if (auto c = detail::search(g, CycleConstraint{}.require(x, Requirement::kBothInG), options)) {
    t.type_index = 1;
    t.witness = std::move(c);
  } else if (auto c2 = detail::search(g, CycleConstraint{}.require(x, Requirement::kExactlyOneInG), options)) {
    t.type_index = 2;
    t.witness = std::move(c2);
  } else if (auto c3 = detail::search(g, CycleConstraint{}.require(x, Requirement::kNeighborEdge), options)) {
    t.type_index = 3;
    t.neighbor_edge = detail::first_neighbor_edge(detail::Piece{g, *c3}, x);
    t.witness = std::move(c3);
  }
  return t;
}

}  // namespace hamsq
