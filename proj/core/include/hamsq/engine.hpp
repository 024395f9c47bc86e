#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hamsq/blocks.hpp"
#include "hamsq/graph.hpp"
#include "hamsq/search.hpp"

namespace hamsq {

struct EngineOptions {
  static constexpr std::size_t kDefaultCap = 12;

  /// Largest graph handed to the exact search (blocks in constructive mode,
  /// whole graphs in oracle mode and classification).
  std::size_t cap = kDefaultCap;
  std::uint64_t budget = SearchOptions::kDefaultBudget;
};

// --- vertex types -----------------------------------------------------------

struct VertexType {
  int type_index = 4;
  std::optional<HamCycle> witness;
  // Type 3: the cycle edge joining two G-neighbors of the vertex.
  std::optional<Edge> neighbor_edge;
};

/// Least realizable type (1..4) of `x`, with a witness cycle for types 1-3.
/// Throws kSquareNotHamiltonian, kSizeCapExceeded, kBudgetExceeded.
VertexType classify_vertex_type(const Graph& g, Vertex x, const EngineOptions& options = {});

// --- block searches ---------------------------------------------------------

/// Hamiltonian cycle of square(b) with both cycle edges at `y` in b and a
/// further cycle edge of b at `z`; when yz is an edge of b the three edges
/// are distinct. `y == z` only asks for the condition at y.
/// Throws kNotTwoConnected, kSizeCapExceeded; kConstructionDefect if no such
/// cycle exists.
HamCycle anchored_block_cycle(const Graph& b, Vertex y, Vertex z, const EngineOptions& options = {});

/// Hamiltonian cycle of square(b) with at least four cycle edges in b.
HamCycle four_edge_cycle(const Graph& b, const EngineOptions& options = {});

// --- compositions -----------------------------------------------------------

struct Composition {
  Graph graph;
  HamCycle cycle;
};

/// Glues cycles of square(g1) and square(g2) through connect(g1,x1,g2,x2,x).
/// Each cycle must have an edge of its graph at the merged vertex.
Composition compose_merge(const Graph& g1, Vertex x1, const HamCycle& c1, const Graph& g2, Vertex x2,
                          const HamCycle& c2, Vertex x);

enum class PendantWitness { kType12, kType3 };

/// Attaches a pendant edge x-u at x1 (renamed x).
/// kType12 needs a cycle edge of g1 at x1; kType3 needs a cycle edge joining
/// two g1-neighbors of x1.
Composition compose_pendant(const Graph& g1, Vertex x1, const HamCycle& c1, PendantWitness kind, Vertex u,
                            Vertex x);

/// c1 has a cycle edge joining two g1-neighbors of x1; c2 has both cycle
/// edges at x2 in g2.
Composition compose_cross(const Graph& g1, Vertex x1, const HamCycle& c1, const Graph& g2, Vertex x2,
                          const HamCycle& c2, Vertex x);

// --- constructions ----------------------------------------------------------

struct TraceStep {
  std::string theorem_case;
  Vertex merged_vertex;
  std::vector<std::size_t> subgraph_sizes;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

/// Block graph of g is a path; u1, u2 are non-cut vertices of distinct
/// endblocks (any two distinct vertices when g is one block). Each anchor
/// gets both cycle edges in g if its endblock is cyclic, exactly one if not.
/// Throws kBlockGraphNotPath, kBadAnchors, kTooSmall.
HamCycle block_path_cycle(const Graph& g, Vertex u1, Vertex u2, const EngineOptions& options = {},
                          std::vector<TraceStep>* trace = nullptr);

/// Block graph of g has exactly one node of degree >= 3, the cut vertex `a`,
/// and `a` lies in at most two acyclic non-end blocks. The cycle has exactly
/// 2 - t(a) edges of g at `a`. Throws kPreconditionViolated.
HamCycle single_branch_cycle(const Graph& g, Vertex a, const EngineOptions& options = {},
                             std::vector<TraceStep>* trace = nullptr);

enum class Decision { kHamiltonian, kNotHamiltonian, kOutOfClass };
enum class Evidence { kNone, kHighTVertex, kTooSmall, kExhaustiveSearch };
enum class Mode { kConstructive, kOracle };

struct Certificate {
  Decision decision = Decision::kOutOfClass;
  std::optional<HamCycle> cycle;
  Evidence evidence = Evidence::kNone;
  std::optional<Vertex> witness_vertex;
  std::vector<TraceStep> trace;
  PreconditionReport preconditions;
};

/// Decision plus evidence. Constructive mode follows the inductive
/// construction and reports kOutOfClass for graphs outside the class;
/// oracle mode answers by exact search on graphs up to `options.cap`.
/// Throws kDisconnectedInput, kSizeCapExceeded and (oracle) kBudgetExceeded.
Certificate decide_and_construct(const Graph& g, Mode mode, const EngineOptions& options = {});

/// Inductive construction for an in-class graph with every t <= 2.
HamCycle construct_in_class(const Graph& g, const EngineOptions& options = {},
                            std::vector<TraceStep>* trace = nullptr);

// --- star centered at a block -----------------------------------------------

struct AcceptableCycle {
  std::size_t center_block = 0;
  Graph block;
  HamCycle cycle;  // hamiltonian cycle of square(block)
  // (cut vertex, partner) with each pair a distinct cycle edge of the block.
  std::vector<std::pair<Vertex, Vertex>> assignment;
};

/// Acceptable cycle for the cyclic block `center_block` of decompose(g).
/// Every other block-graph node must have degree <= 2, so paths qualify with
/// any cyclic center. Throws kWrongShape, kSizeCapExceeded, kBudgetExceeded.
std::optional<AcceptableCycle> acceptable_cycle(const Graph& g, std::size_t center_block,
                                                const EngineOptions& options = {});

/// Center found automatically: the center of a star-shaped block graph, or
/// the only block. Paths are ambiguous and throw kWrongShape.
std::optional<AcceptableCycle> acceptable_cycle(const Graph& g, const EngineOptions& options = {});

/// Cycle of square(g) keeping every edge of the acceptable cycle except the
/// assigned pairs.
HamCycle star_block_cycle(const Graph& g, const AcceptableCycle& ac, const EngineOptions& options = {},
                          std::vector<TraceStep>* trace = nullptr);

std::string to_string(Decision d);
std::string to_string(Evidence e);

}  // namespace hamsq
