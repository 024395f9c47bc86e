#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "hamsq/blocks.hpp"
#include "hamsq/graph.hpp"
#include "hamsq/io.hpp"
#include "hamsq/search.hpp"

namespace hamsq::testing {

using Rng = std::mt19937_64;

inline std::uint64_t pick(Rng& rng, std::uint64_t n) { return rng() % n; }

inline Graph shift(const Graph& g, std::uint32_t by) {
  std::vector<Vertex> vs;
  for (Vertex v : g.vertices()) vs.push_back(Vertex{v.id + by});
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) es.push_back(Edge{Vertex{e.u.id + by}, Vertex{e.v.id + by}});
  return Graph(vs, es);
}

inline Graph complete(std::uint32_t n) {
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  for (std::uint32_t i = 0; i < n; ++i) {
    vs.push_back(Vertex{i});
    for (std::uint32_t j = i + 1; j < n; ++j) es.push_back(Edge{Vertex{i}, Vertex{j}});
  }
  return Graph(vs, es);
}

inline Graph cycle_graph(std::uint32_t n) {
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  for (std::uint32_t i = 0; i < n; ++i) {
    vs.push_back(Vertex{i});
    es.push_back(Edge::of(Vertex{i}, Vertex{(i + 1) % n}));
  }
  return Graph(vs, es);
}

inline Graph path_graph(std::uint32_t n) {
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  for (std::uint32_t i = 0; i < n; ++i) {
    vs.push_back(Vertex{i});
    if (i + 1 < n) es.push_back(Edge{Vertex{i}, Vertex{i + 1}});
  }
  return Graph(vs, es);
}

/// S(K1,3): center 0, legs 0-1-2, 0-3-4, 0-5-6.
inline Graph claw_subdivided() { return Graph::from_pairs({{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}}); }

inline const std::vector<Graph>& blocks_of_order(int n) {
  static std::vector<std::vector<Graph>> cache(11);
  auto& slot = cache.at(static_cast<std::size_t>(n));
  if (slot.empty()) slot = biconnected_graphs(n);
  return slot;
}

/// Random block (K2 with probability p_edge, else a 2-connected catalog graph
/// on 3..max_size vertices).
inline Graph random_block(Rng& rng, int max_size, int p_edge_percent) {
  if (max_size < 3 || static_cast<int>(pick(rng, 100)) < p_edge_percent) return complete(2);
  const int s = 3 + static_cast<int>(pick(rng, static_cast<std::uint64_t>(max_size - 2)));
  const auto& blocks = blocks_of_order(s);
  return blocks[pick(rng, blocks.size())];
}

/// A chain of `count` blocks grown from `start`, each glued to the previous
/// one at a random vertex other than the incoming cut. New vertices take ids
/// from `next`.
struct Chain {
  std::vector<Edge> edges;
  std::vector<Vertex> vertices;  // excluding start
  std::vector<Graph> blocks;     // relabeled
  Vertex far;                    // a non-cut vertex of the last block
};

inline Chain random_chain(Rng& rng, Vertex start, int count, std::uint32_t& next, int max_block, int p_edge_percent,
                          const std::vector<Graph>* forced_first = nullptr) {
  Chain c;
  Vertex at = start;
  for (int i = 0; i < count; ++i) {
    Graph b = (i == 0 && forced_first) ? (*forced_first)[pick(rng, forced_first->size())]
                                       : random_block(rng, max_block, p_edge_percent);
    const auto root = static_cast<std::uint32_t>(pick(rng, b.order()));
    std::vector<Vertex> map(b.order());
    for (std::uint32_t j = 0; j < b.order(); ++j) map[j] = j == root ? at : Vertex{next++};
    for (std::uint32_t j = 0; j < b.order(); ++j) {
      if (j != root) c.vertices.push_back(map[j]);
    }
    std::vector<Edge> be;
    for (const Edge& e : b.edges()) {
      be.push_back(Edge::of(map[e.u.id], map[e.v.id]));
      c.edges.push_back(be.back());
    }
    std::vector<Vertex> bv(map.begin(), map.end());
    std::sort(bv.begin(), bv.end());
    c.blocks.push_back(Graph(bv, be));
    std::vector<Vertex> others;
    for (std::uint32_t j = 0; j < b.order(); ++j) {
      if (j != root) others.push_back(map[j]);
    }
    at = others[pick(rng, others.size())];
  }
  c.far = at;
  return c;
}

inline Graph from_parts(std::vector<Vertex> vs, const std::vector<Edge>& es) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return Graph(vs, es);
}

/// Number of cycle edges at v that are edges of g, recomputed from g.
inline int g_edges_at(const Graph& g, const HamCycle& c, Vertex v) {
  auto [p, q] = c.neighbors(v);
  return static_cast<int>(g.has_edge(v, p)) + static_cast<int>(g.has_edge(v, q));
}

/// Both cycle edges at y in g; a cycle edge of g at z, different from the
/// edges at y when yz is an edge.
inline bool anchored_conditions_hold(const Graph& g, const HamCycle& c, Vertex y, Vertex z) {
  if (g_edges_at(g, c, y) != 2) return false;
  auto [p, q] = c.neighbors(z);
  for (Vertex w : {p, q}) {
    if (!g.has_edge(z, w)) continue;
    if (y != z && w == y) continue;  // the edge zy is also an edge at y
    return true;
  }
  return y == z;
}

inline int g_edges_total(const Graph& g, const HamCycle& c) {
  int n = 0;
  for (const Edge& e : c.edges()) n += g.has_edge(e.u, e.v);
  return n;
}

/// Exhaustive answer for small graphs, independent of the engine.
inline bool square_hamiltonian(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  return find_ham_cycle_constrained(g, CycleConstraint{}).cycle.has_value();
}

/// Permutation brute force over square(g); n <= 9.
inline bool brute_force_square_hamiltonian(const Graph& g) {
  const int n = static_cast<int>(g.order());
  if (n < 3 || n > 9) return false;
  const Graph sq = square(g);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = sq.has_edge_index(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>((i + 1) % n)]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return false;
}

}  // namespace hamsq::testing
