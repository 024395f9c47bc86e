#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hamsq/graph.hpp"

namespace hamsq {

enum class BlockKind { kCyclic, kAcyclic };
enum class EndStatus { kEndBlock, kNonEndBlock };

struct BlockInfo {
  std::size_t degree = 0;  // number of cut vertices inside the block
  BlockKind kind = BlockKind::kAcyclic;
  EndStatus end_status = EndStatus::kNonEndBlock;
};

/// Blocks, cut vertices and the block graph of a connected graph.
///
/// Block-graph nodes are numbered blocks first (`0 .. block_count()-1`, in
/// block order), then cut vertices in ascending vertex order.
class BlockDecomposition {
 public:
  BlockDecomposition() = default;
  BlockDecomposition(std::vector<std::vector<Vertex>> blocks, std::vector<Vertex> cut_vertices,
                     std::vector<BlockInfo> info);

  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<Vertex>& block(std::size_t i) const { return blocks_[i]; }
  const std::vector<std::vector<Vertex>>& blocks() const { return blocks_; }
  const BlockInfo& info(std::size_t i) const { return info_[i]; }
  const std::vector<Vertex>& cut_vertices() const { return cut_vertices_; }

  bool is_cut_vertex(Vertex v) const;
  /// Indices of blocks containing `v`, ascending.
  std::vector<std::size_t> blocks_containing(Vertex v) const;

  // Block graph.
  std::size_t node_count() const { return adjacency_.size(); }
  bool is_block_node(int node) const { return node < static_cast<int>(blocks_.size()); }
  int node_of_block(std::size_t i) const { return static_cast<int>(i); }
  /// -1 when `v` is not a cut vertex.
  int node_of_cut(Vertex v) const;
  Vertex cut_of_node(int node) const;
  const std::vector<int>& node_neighbors(int node) const {
    return adjacency_[static_cast<std::size_t>(node)];
  }
  std::size_t node_degree(int node) const { return node_neighbors(node).size(); }
  /// Distances in the block graph from `node`.
  std::vector<int> node_distances(int node) const;
  /// Node sequence of the unique block-graph path between two nodes.
  std::vector<int> node_path(int from, int to) const;

  /// Cut vertices lying in at least three blocks.
  std::vector<Vertex> branch_points() const;

 private:
  std::vector<std::vector<Vertex>> blocks_;
  std::vector<Vertex> cut_vertices_;
  std::vector<BlockInfo> info_;
  std::vector<std::vector<int>> adjacency_;
};

/// Lowpoint DFS. Blocks are sorted by their (sorted) vertex lists, which
/// orders them by minimum vertex first.
/// Throws kTrivialGraph for a single vertex and kDisconnectedInput.
BlockDecomposition decompose(const Graph& g);

/// Subgraph of `g` formed by block `i`.
Graph block_subgraph(const Graph& g, const BlockDecomposition& bd, std::size_t i);

/// Number of acyclic non-end blocks containing `a`.
std::size_t t_count(const Graph& g, Vertex a);
std::size_t t_count(const BlockDecomposition& bd, Vertex a);

struct PreconditionReport {
  bool in_class = true;
  int violated_condition = 0;  // 0 when in class, else 1 or 2
  std::string reason;
  std::vector<Vertex> witness;  // condition 1: block vertices; condition 2: the offending pair
};

/// In class iff every block-graph node of degree >= 3 is a cut vertex and
/// all such nodes are pairwise at block-graph distance >= 4. Reports the
/// first violated condition only.
PreconditionReport check_main_preconditions(const Graph& g);
PreconditionReport check_main_preconditions(const BlockDecomposition& bd);

/// Maximal block-graph paths whose ends have degree != 2 and whose interior
/// nodes have degree 2. Each path starts at its smaller end node; the list
/// is sorted.
std::vector<std::vector<int>> branches(const BlockDecomposition& bd);

enum class BlockGraphShape { kPath, kStarAtCut, kStarAtBlock, kOther };

struct ShapeReport {
  BlockGraphShape shape = BlockGraphShape::kOther;
  std::optional<Vertex> center_cut;
  std::optional<std::size_t> center_block;
};

ShapeReport is_subdivided_star(const BlockDecomposition& bd);

std::string to_string(BlockGraphShape shape);

}  // namespace hamsq
