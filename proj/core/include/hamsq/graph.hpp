#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace hamsq {

/// Opaque, totally ordered vertex identifier. Human-readable labels live at
/// the I/O boundary (see io.hpp); the engine only ever compares ids.
struct Vertex {
  std::uint32_t id = 0;

  friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// Unordered vertex pair, normalized so that `u < v`.
struct Edge {
  Vertex u;
  Vertex v;

  static constexpr Edge of(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph with an ordered vertex set.
///
/// Vertices are stored sorted, and every algorithm in the library addresses
/// them through the dense index `[0, order())` in that order. Adjacency lists
/// are sorted by index, so iterating neighbors visits them in ascending
/// vertex order.
class Graph {
 public:
  Graph() = default;

  /// Throws `Error(kInvalidGraph)` on duplicate vertices, loops, parallel
  /// edges, or edge endpoints outside `vertices`.
  Graph(std::vector<Vertex> vertices, std::span<const Edge> edges);

  /// Convenience for tests and generators: vertex set is the set of endpoints.
  static Graph from_pairs(std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> edges);
  static Graph from_pairs(std::span<const std::pair<std::uint32_t, std::uint32_t>> edges);

  std::size_t order() const { return vertices_.size(); }
  std::size_t size() const { return edge_count_; }
  std::span<const Vertex> vertices() const { return vertices_; }

  bool contains(Vertex v) const { return index_of(v) >= 0; }
  /// Dense index of `v`, or -1.
  int index_of(Vertex v) const;
  /// Dense index of `v`; throws `Error(kVertexNotFound)`.
  int index(Vertex v) const;
  Vertex vertex(int index) const { return vertices_[static_cast<std::size_t>(index)]; }

  std::span<const int> neighbor_indices(int index) const {
    return adjacency_[static_cast<std::size_t>(index)];
  }
  std::vector<Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const;
  bool has_edge(Vertex a, Vertex b) const;
  bool has_edge_index(int a, int b) const;
  std::vector<Edge> edges() const;
  Vertex max_vertex() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Vertex> vertices_;
  std::vector<std::vector<int>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// G²: same vertices, edges between vertices at distance 1 or 2.
Graph square(const Graph& g);

/// G₁[x₁=x₂]G₂. The merged vertex gets the fresh label `x`, which inherits
/// the neighborhoods of x₁ in g1 and x₂ in g2.
Graph connect(const Graph& g1, Vertex x1, const Graph& g2, Vertex x2, Vertex x);

/// Shortest-path length, or nullopt when u and v lie in different components.
std::optional<int> distance(const Graph& g, Vertex u, Vertex v);

/// BFS distances by dense index; -1 marks unreachable vertices.
std::vector<int> distances_from(const Graph& g, int source);

/// ⟨A⟩, the subgraph induced by `a`.
Graph induced(const Graph& g, std::span<const Vertex> a);

/// G − A.
Graph without(const Graph& g, std::span<const Vertex> a);

bool is_connected(const Graph& g);

/// Vertex sets of the connected components, each sorted, ordered by minimum.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// Union of vertex and edge sets. The graphs may share vertices.
Graph graph_union(const Graph& g1, const Graph& g2);

/// Replace vertex `from` by `to` (which must not already be present).
Graph rename_vertex(const Graph& g, Vertex from, Vertex to);

/// Add a new vertex `leaf` adjacent only to `at`.
Graph add_pendant(const Graph& g, Vertex at, Vertex leaf);

/// True iff an edge-preserving bijection exists. Degree-sequence and
/// neighbor-degree pruning, then backtracking. Throws `kSizeCapExceeded`
/// if either graph has more than `cap` vertices.
bool is_isomorphic_small(const Graph& g1, const Graph& g2, std::size_t cap = 12);

enum class Provenance : std::uint8_t { kInG, kInSquareOnly };

/// A cyclic vertex sequence with, for every consecutive pair
/// (order[i], order[i+1 mod n]), whether that pair is an edge of the host
/// graph or only of its square.
///
/// `from_order` puts the sequence in canonical form: it starts at the minimum
/// vertex and proceeds toward the smaller of that vertex's two neighbors.
class HamCycle {
 public:
  HamCycle() = default;

  static HamCycle from_order(const Graph& host, std::vector<Vertex> order);

  /// Takes order and flags verbatim (used when reading certificates, which
  /// may have been tampered with; certify re-checks the flags).
  static HamCycle from_parts(std::vector<Vertex> order, std::vector<Provenance> provenance);

  std::span<const Vertex> order() const { return order_; }
  std::span<const Provenance> provenance() const { return provenance_; }
  std::size_t size() const { return order_.size(); }

  int position(Vertex v) const;
  bool contains(Vertex v) const { return position(v) >= 0; }

  /// Predecessor and successor of `v` in the stored order.
  std::pair<Vertex, Vertex> neighbors(Vertex v) const;

  /// Number of cycle edges at `v` flagged kInG (0, 1 or 2).
  int in_g_count(Vertex v) const;
  int in_g_total() const;
  bool in_g(Vertex a, Vertex b) const;

  bool has_edge(Vertex a, Vertex b) const;
  std::vector<Edge> edges() const;

  /// All cycle vertices, starting at `start` and walking away from its
  /// cycle-neighbor `away_from`.
  std::vector<Vertex> walk(Vertex start, Vertex away_from) const;

  friend bool operator==(const HamCycle& a, const HamCycle& b) {
    return a.order_ == b.order_ && a.provenance_ == b.provenance_;
  }

 private:
  void build_index();

  std::vector<Vertex> order_;
  std::vector<Provenance> provenance_;
  std::vector<std::pair<Vertex, int>> index_;
};

/// Rotation/reflection normal form of a cyclic sequence.
std::vector<Vertex> canonical_cycle_order(std::span<const Vertex> order);

}  // namespace hamsq
