#include "hamsq/blocks.hpp"

#include <algorithm>
#include <queue>
#include <utility>

#include "hamsq/error.hpp"

namespace hamsq {

BlockDecomposition::BlockDecomposition(std::vector<std::vector<Vertex>> blocks,
                                       std::vector<Vertex> cut_vertices, std::vector<BlockInfo> info)
    : blocks_(std::move(blocks)), cut_vertices_(std::move(cut_vertices)), info_(std::move(info)) {
  adjacency_.resize(blocks_.size() + cut_vertices_.size());
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    for (Vertex v : blocks_[b]) {
      const int c = node_of_cut(v);
      if (c < 0) continue;
      adjacency_[b].push_back(c);
      adjacency_[static_cast<std::size_t>(c)].push_back(static_cast<int>(b));
    }
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool BlockDecomposition::is_cut_vertex(Vertex v) const {
  return std::binary_search(cut_vertices_.begin(), cut_vertices_.end(), v);
}

std::vector<std::size_t> BlockDecomposition::blocks_containing(Vertex v) const {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (std::binary_search(blocks_[b].begin(), blocks_[b].end(), v)) out.push_back(b);
  }
  return out;
}

int BlockDecomposition::node_of_cut(Vertex v) const {
  auto it = std::lower_bound(cut_vertices_.begin(), cut_vertices_.end(), v);
  if (it == cut_vertices_.end() || *it != v) return -1;
  return static_cast<int>(blocks_.size() + static_cast<std::size_t>(it - cut_vertices_.begin()));
}

Vertex BlockDecomposition::cut_of_node(int node) const {
  return cut_vertices_[static_cast<std::size_t>(node) - blocks_.size()];
}

std::vector<int> BlockDecomposition::node_distances(int node) const {
  std::vector<int> dist(adjacency_.size(), -1);
  std::queue<int> queue;
  dist[static_cast<std::size_t>(node)] = 0;
  queue.push(node);
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (int w : adjacency_[static_cast<std::size_t>(u)]) {
      if (dist[static_cast<std::size_t>(w)] >= 0) continue;
      dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
      queue.push(w);
    }
  }
  return dist;
}

std::vector<int> BlockDecomposition::node_path(int from, int to) const {
  const auto dist = node_distances(to);
  std::vector<int> path{from};
  int cur = from;
  while (cur != to) {
    for (int w : adjacency_[static_cast<std::size_t>(cur)]) {
      if (dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(cur)] - 1) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

std::vector<Vertex> BlockDecomposition::branch_points() const {
  std::vector<Vertex> out;
  for (Vertex c : cut_vertices_) {
    if (node_degree(node_of_cut(c)) >= 3) out.push_back(c);
  }
  return out;
}

BlockDecomposition decompose(const Graph& g) {
  const int n = static_cast<int>(g.order());
  if (n == 0) throw Error(ErrorCode::kTrivialGraph, "empty graph");
  if (n == 1) throw Error(ErrorCode::kTrivialGraph, "single vertex");
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnectedInput, "graph is not connected");

  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<std::pair<int, int>> edge_stack;
  std::vector<std::vector<Vertex>> blocks;
  std::vector<int> block_edges;
  std::vector<char> is_cut(static_cast<std::size_t>(n), 0);

  struct Frame {
    int v;
    int parent;
    std::size_t next;
  };
  std::vector<Frame> stack{{0, -1, 0}};
  disc[0] = low[0] = 0;
  int timer = 1;
  int root_children = 0;

  auto pop_block = [&](int u, int w) {
    std::vector<Vertex> members;
    int count = 0;
    while (true) {
      auto [a, b] = edge_stack.back();
      edge_stack.pop_back();
      members.push_back(g.vertex(a));
      members.push_back(g.vertex(b));
      ++count;
      if (a == u && b == w) break;
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    blocks.push_back(std::move(members));
    block_edges.push_back(count);
  };

  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto nbrs = g.neighbor_indices(f.v);
    if (f.next < nbrs.size()) {
      const int w = nbrs[f.next++];
      if (disc[static_cast<std::size_t>(w)] < 0) {
        edge_stack.emplace_back(f.v, w);
        disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
        if (f.v == 0) ++root_children;
        stack.push_back({w, f.v, 0});
      } else if (w != f.parent && disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(f.v)]) {
        edge_stack.emplace_back(f.v, w);
        low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(w)]);
      }
      continue;
    }
    const int w = f.v;
    const int u = f.parent;
    stack.pop_back();
    if (u < 0) continue;
    low[static_cast<std::size_t>(u)] = std::min(low[static_cast<std::size_t>(u)], low[static_cast<std::size_t>(w)]);
    if (low[static_cast<std::size_t>(w)] >= disc[static_cast<std::size_t>(u)]) {
      if (u != 0) is_cut[static_cast<std::size_t>(u)] = 1;
      pop_block(u, w);
    }
  }
  if (root_children >= 2) is_cut[0] = 1;

  std::vector<std::size_t> perm(blocks.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return blocks[a] < blocks[b]; });

  std::vector<Vertex> cuts;
  for (int i = 0; i < n; ++i) {
    if (is_cut[static_cast<std::size_t>(i)]) cuts.push_back(g.vertex(i));
  }
  std::vector<std::vector<Vertex>> sorted_blocks;
  std::vector<BlockInfo> info;
  for (std::size_t idx : perm) {
    BlockInfo bi;
    for (Vertex v : blocks[idx]) bi.degree += std::binary_search(cuts.begin(), cuts.end(), v);
    bi.kind = block_edges[idx] == 1 ? BlockKind::kAcyclic : BlockKind::kCyclic;
    bi.end_status = bi.degree == 1 ? EndStatus::kEndBlock : EndStatus::kNonEndBlock;
    sorted_blocks.push_back(std::move(blocks[idx]));
    info.push_back(bi);
  }
  return BlockDecomposition(std::move(sorted_blocks), std::move(cuts), std::move(info));
}

Graph block_subgraph(const Graph& g, const BlockDecomposition& bd, std::size_t i) {
  return induced(g, bd.block(i));
}

std::size_t t_count(const BlockDecomposition& bd, Vertex a) {
  // A lone K2 has degree 0 and is not counted.
  if (!bd.is_cut_vertex(a)) return 0;
  std::size_t t = 0;
  for (std::size_t b : bd.blocks_containing(a)) {
    const BlockInfo& bi = bd.info(b);
    t += bi.kind == BlockKind::kAcyclic && bi.end_status == EndStatus::kNonEndBlock;
  }
  return t;
}

std::size_t t_count(const Graph& g, Vertex a) {
  if (!g.contains(a)) throw Error(ErrorCode::kVertexNotFound, "vertex #" + std::to_string(a.id));
  if (g.order() == 1) return 0;
  return t_count(decompose(g), a);
}

PreconditionReport check_main_preconditions(const BlockDecomposition& bd) {
  PreconditionReport r;
  std::vector<int> high;
  for (int node = 0; node < static_cast<int>(bd.node_count()); ++node) {
    if (bd.node_degree(node) < 3) continue;
    if (bd.is_block_node(node)) {
      r.in_class = false;
      r.violated_condition = 1;
      r.witness = bd.block(static_cast<std::size_t>(node));
      r.reason = "a block has block-graph degree " + std::to_string(bd.node_degree(node));
      return r;
    }
    high.push_back(node);
  }
  for (std::size_t i = 0; i < high.size(); ++i) {
    const auto dist = bd.node_distances(high[i]);
    for (std::size_t j = i + 1; j < high.size(); ++j) {
      const int d = dist[static_cast<std::size_t>(high[j])];
      if (d < 4) {
        r.in_class = false;
        r.violated_condition = 2;
        r.witness = {bd.cut_of_node(high[i]), bd.cut_of_node(high[j])};
        r.reason = "two branch cut vertices at block-graph distance " + std::to_string(d);
        return r;
      }
    }
  }
  return r;
}

PreconditionReport check_main_preconditions(const Graph& g) {
  if (g.order() < 3) throw Error(ErrorCode::kTooSmall, "need at least 3 vertices");
  return check_main_preconditions(decompose(g));
}

std::vector<std::vector<int>> branches(const BlockDecomposition& bd) {
  std::vector<std::vector<int>> out;
  const int nodes = static_cast<int>(bd.node_count());
  for (int s = 0; s < nodes; ++s) {
    if (bd.node_degree(s) == 2) continue;
    for (int first : bd.node_neighbors(s)) {
      std::vector<int> path{s, first};
      int prev = s;
      int cur = first;
      while (bd.node_degree(cur) == 2) {
        const auto& nb = bd.node_neighbors(cur);
        const int next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
        path.push_back(cur);
      }
      if (s < cur) out.push_back(std::move(path));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ShapeReport is_subdivided_star(const BlockDecomposition& bd) {
  ShapeReport r;
  int center = -1;
  int high = 0;
  for (int node = 0; node < static_cast<int>(bd.node_count()); ++node) {
    if (bd.node_degree(node) >= 3) {
      ++high;
      center = node;
    }
  }
  if (high == 0) {
    r.shape = BlockGraphShape::kPath;
  } else if (high > 1) {
    r.shape = BlockGraphShape::kOther;
  } else if (bd.is_block_node(center)) {
    r.shape = BlockGraphShape::kStarAtBlock;
    r.center_block = static_cast<std::size_t>(center);
  } else {
    r.shape = BlockGraphShape::kStarAtCut;
    r.center_cut = bd.cut_of_node(center);
  }
  return r;
}

std::string to_string(BlockGraphShape shape) {
  switch (shape) {
    case BlockGraphShape::kPath: return "path";
    case BlockGraphShape::kStarAtCut: return "star-at-cut-vertex";
    case BlockGraphShape::kStarAtBlock: return "star-at-block";
    case BlockGraphShape::kOther: return "other";
  }
  return "other";
}

}  // namespace hamsq
