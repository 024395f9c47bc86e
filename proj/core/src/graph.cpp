#include "hamsq/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "hamsq/error.hpp"

namespace hamsq {

namespace {

std::string describe(Vertex v) { return "vertex #" + std::to_string(v.id); }

}  // namespace

Graph::Graph(std::vector<Vertex> vertices, std::span<const Edge> edges)
    : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw Error(ErrorCode::kInvalidGraph, "duplicate vertex identifier");
  }
  adjacency_.resize(vertices_.size());
  for (const Edge& e : edges) {
    if (e.u == e.v) throw Error(ErrorCode::kInvalidGraph, "loop at " + describe(e.u));
    const int a = index_of(e.u);
    const int b = index_of(e.v);
    if (a < 0 || b < 0) {
      throw Error(ErrorCode::kInvalidGraph, "edge endpoint outside the vertex set");
    }
    adjacency_[static_cast<std::size_t>(a)].push_back(b);
    adjacency_[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw Error(ErrorCode::kInvalidGraph, "parallel edge");
    }
    edge_count_ += list.size();
  }
  edge_count_ /= 2;
}

Graph Graph::from_pairs(std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> edges) {
  return from_pairs(std::span<const std::pair<std::uint32_t, std::uint32_t>>(edges.begin(), edges.size()));
}

Graph Graph::from_pairs(std::span<const std::pair<std::uint32_t, std::uint32_t>> edges) {
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  for (auto [a, b] : edges) {
    vs.push_back(Vertex{a});
    vs.push_back(Vertex{b});
    es.push_back(Edge::of(Vertex{a}, Vertex{b}));
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return Graph(std::move(vs), es);
}

int Graph::index_of(Vertex v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return -1;
  return static_cast<int>(it - vertices_.begin());
}

int Graph::index(Vertex v) const {
  const int i = index_of(v);
  if (i < 0) throw Error(ErrorCode::kVertexNotFound, describe(v));
  return i;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (int j : neighbor_indices(index(v))) out.push_back(vertex(j));
  return out;
}

std::size_t Graph::degree(Vertex v) const { return neighbor_indices(index(v)).size(); }

bool Graph::has_edge_index(int a, int b) const {
  const auto& list = adjacency_[static_cast<std::size_t>(a)];
  return std::binary_search(list.begin(), list.end(), b);
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  const int i = index_of(a);
  const int j = index_of(b);
  if (i < 0 || j < 0) return false;
  return has_edge_index(i, j);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < adjacency_.size(); ++i) {
    for (int j : adjacency_[i]) {
      if (static_cast<std::size_t>(j) > i) out.push_back(Edge{vertices_[i], vertex(j)});
    }
  }
  return out;
}

Vertex Graph::max_vertex() const { return vertices_.empty() ? Vertex{} : vertices_.back(); }

Graph square(const Graph& g) {
  const int n = static_cast<int>(g.order());
  std::vector<Edge> es;
  std::vector<int> mark(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    mark[static_cast<std::size_t>(i)] = i;
    for (int j : g.neighbor_indices(i)) {
      if (mark[static_cast<std::size_t>(j)] != i) {
        mark[static_cast<std::size_t>(j)] = i;
        if (j > i) es.push_back(Edge{g.vertex(i), g.vertex(j)});
      }
      for (int k : g.neighbor_indices(j)) {
        if (mark[static_cast<std::size_t>(k)] == i) continue;
        mark[static_cast<std::size_t>(k)] = i;
        if (k > i) es.push_back(Edge{g.vertex(i), g.vertex(k)});
      }
    }
  }
  return Graph(std::vector<Vertex>(g.vertices().begin(), g.vertices().end()), es);
}

Graph connect(const Graph& g1, Vertex x1, const Graph& g2, Vertex x2, Vertex x) {
  if (!g1.contains(x1)) throw Error(ErrorCode::kVertexNotFound, "x1 not in first graph");
  if (!g2.contains(x2)) throw Error(ErrorCode::kVertexNotFound, "x2 not in second graph");
  for (Vertex v : g1.vertices()) {
    if (g2.contains(v)) throw Error(ErrorCode::kNonDisjointVertexSets, describe(v));
  }
  if (g1.contains(x) || g2.contains(x)) {
    throw Error(ErrorCode::kFreshLabelCollision, describe(x));
  }
  auto relabel = [&](Vertex v, Vertex from) { return v == from ? x : v; };
  std::vector<Vertex> vs;
  for (Vertex v : g1.vertices()) vs.push_back(relabel(v, x1));
  for (Vertex v : g2.vertices()) {
    if (v != x2) vs.push_back(v);
  }
  std::vector<Edge> es;
  for (const Edge& e : g1.edges()) es.push_back(Edge::of(relabel(e.u, x1), relabel(e.v, x1)));
  for (const Edge& e : g2.edges()) es.push_back(Edge::of(relabel(e.u, x2), relabel(e.v, x2)));
  return Graph(std::move(vs), es);
}

std::vector<int> distances_from(const Graph& g, int source) {
  std::vector<int> dist(g.order(), -1);
  std::queue<int> queue;
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (int w : g.neighbor_indices(u)) {
      if (dist[static_cast<std::size_t>(w)] >= 0) continue;
      dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
      queue.push(w);
    }
  }
  return dist;
}

std::optional<int> distance(const Graph& g, Vertex u, Vertex v) {
  const int a = g.index(u);
  const int b = g.index(v);
  const int d = distances_from(g, a)[static_cast<std::size_t>(b)];
  if (d < 0) return std::nullopt;
  return d;
}

Graph induced(const Graph& g, std::span<const Vertex> a) {
  std::vector<Vertex> vs(a.begin(), a.end());
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  std::vector<char> keep(g.order(), 0);
  for (Vertex v : vs) keep[static_cast<std::size_t>(g.index(v))] = 1;
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) {
    if (keep[static_cast<std::size_t>(g.index_of(e.u))] && keep[static_cast<std::size_t>(g.index_of(e.v))]) {
      es.push_back(e);
    }
  }
  return Graph(std::move(vs), es);
}

Graph without(const Graph& g, std::span<const Vertex> a) {
  std::vector<char> drop(g.order(), 0);
  for (Vertex v : a) drop[static_cast<std::size_t>(g.index(v))] = 1;
  std::vector<Vertex> rest;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (!drop[i]) rest.push_back(g.vertices()[i]);
  }
  return induced(g, rest);
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(g.order(), 0);
  for (int s = 0; s < static_cast<int>(g.order()); ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<Vertex> comp;
    std::vector<int> stack{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      comp.push_back(g.vertex(u));
      for (int w : g.neighbor_indices(u)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

Graph graph_union(const Graph& g1, const Graph& g2) {
  std::vector<Vertex> vs(g1.vertices().begin(), g1.vertices().end());
  vs.insert(vs.end(), g2.vertices().begin(), g2.vertices().end());
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  std::vector<Edge> es = g1.edges();
  const auto more = g2.edges();
  es.insert(es.end(), more.begin(), more.end());
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  return Graph(std::move(vs), es);
}

Graph rename_vertex(const Graph& g, Vertex from, Vertex to) {
  if (!g.contains(from)) throw Error(ErrorCode::kVertexNotFound, describe(from));
  if (from == to) return g;
  if (g.contains(to)) throw Error(ErrorCode::kFreshLabelCollision, describe(to));
  auto map = [&](Vertex v) { return v == from ? to : v; };
  std::vector<Vertex> vs;
  for (Vertex v : g.vertices()) vs.push_back(map(v));
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) es.push_back(Edge::of(map(e.u), map(e.v)));
  return Graph(std::move(vs), es);
}

Graph add_pendant(const Graph& g, Vertex at, Vertex leaf) {
  if (!g.contains(at)) throw Error(ErrorCode::kVertexNotFound, describe(at));
  if (g.contains(leaf)) throw Error(ErrorCode::kFreshLabelCollision, describe(leaf));
  std::vector<Vertex> vs(g.vertices().begin(), g.vertices().end());
  vs.push_back(leaf);
  std::vector<Edge> es = g.edges();
  es.push_back(Edge::of(at, leaf));
  return Graph(std::move(vs), es);
}

// --- HamCycle ---------------------------------------------------------------

std::vector<Vertex> canonical_cycle_order(std::span<const Vertex> order) {
  std::vector<Vertex> out(order.begin(), order.end());
  if (out.size() < 2) return out;
  auto min_it = std::min_element(out.begin(), out.end());
  std::rotate(out.begin(), min_it, out.end());
  if (out.size() > 2 && out.back() < out[1]) std::reverse(out.begin() + 1, out.end());
  return out;
}

HamCycle HamCycle::from_order(const Graph& host, std::vector<Vertex> order) {
  HamCycle c;
  c.order_ = canonical_cycle_order(order);
  const std::size_t n = c.order_.size();
  c.provenance_.resize(n, Provenance::kInSquareOnly);
  for (std::size_t i = 0; i < n && n > 1; ++i) {
    if (host.has_edge(c.order_[i], c.order_[(i + 1) % n])) c.provenance_[i] = Provenance::kInG;
  }
  c.build_index();
  return c;
}

HamCycle HamCycle::from_parts(std::vector<Vertex> order, std::vector<Provenance> provenance) {
  HamCycle c;
  c.order_ = std::move(order);
  c.provenance_ = std::move(provenance);
  c.provenance_.resize(c.order_.size(), Provenance::kInSquareOnly);
  c.build_index();
  return c;
}

void HamCycle::build_index() {
  index_.clear();
  for (std::size_t i = 0; i < order_.size(); ++i) index_.emplace_back(order_[i], static_cast<int>(i));
  std::sort(index_.begin(), index_.end());
}

int HamCycle::position(Vertex v) const {
  auto it = std::lower_bound(index_.begin(), index_.end(), std::pair<Vertex, int>{v, -1});
  if (it == index_.end() || it->first != v) return -1;
  return it->second;
}

std::pair<Vertex, Vertex> HamCycle::neighbors(Vertex v) const {
  const int p = position(v);
  if (p < 0) throw Error(ErrorCode::kVertexNotFound, describe(v));
  const int n = static_cast<int>(order_.size());
  return {order_[static_cast<std::size_t>((p + n - 1) % n)], order_[static_cast<std::size_t>((p + 1) % n)]};
}

int HamCycle::in_g_count(Vertex v) const {
  const int p = position(v);
  if (p < 0) throw Error(ErrorCode::kVertexNotFound, describe(v));
  const int n = static_cast<int>(order_.size());
  return (provenance_[static_cast<std::size_t>(p)] == Provenance::kInG) +
         (provenance_[static_cast<std::size_t>((p + n - 1) % n)] == Provenance::kInG);
}

int HamCycle::in_g_total() const {
  return static_cast<int>(std::count(provenance_.begin(), provenance_.end(), Provenance::kInG));
}

bool HamCycle::in_g(Vertex a, Vertex b) const {
  const int p = position(a);
  const int q = position(b);
  if (p < 0 || q < 0) return false;
  const int n = static_cast<int>(order_.size());
  if ((p + 1) % n == q) return provenance_[static_cast<std::size_t>(p)] == Provenance::kInG;
  if ((q + 1) % n == p) return provenance_[static_cast<std::size_t>(q)] == Provenance::kInG;
  return false;
}

bool HamCycle::has_edge(Vertex a, Vertex b) const {
  const int p = position(a);
  const int q = position(b);
  if (p < 0 || q < 0 || p == q) return false;
  const int n = static_cast<int>(order_.size());
  return (p + 1) % n == q || (q + 1) % n == p;
}

std::vector<Edge> HamCycle::edges() const {
  std::vector<Edge> out;
  const std::size_t n = order_.size();
  for (std::size_t i = 0; i < n && n > 1; ++i) out.push_back(Edge::of(order_[i], order_[(i + 1) % n]));
  return out;
}

std::vector<Vertex> HamCycle::walk(Vertex start, Vertex away_from) const {
  const int p = position(start);
  if (p < 0) throw Error(ErrorCode::kVertexNotFound, describe(start));
  const int n = static_cast<int>(order_.size());
  const bool forward = order_[static_cast<std::size_t>((p + n - 1) % n)] == away_from;
  std::vector<Vertex> out;
  out.reserve(order_.size());
  for (int k = 0; k < n; ++k) {
    const int i = forward ? (p + k) % n : (p - k + n) % n;
    out.push_back(order_[static_cast<std::size_t>(i)]);
  }
  return out;
}

}  // namespace hamsq
