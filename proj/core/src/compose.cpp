#include <algorithm>
#include <string>

#include "glue.hpp"
#include "hamsq/engine.hpp"
#include "hamsq/error.hpp"

namespace hamsq {

namespace detail {

namespace {

std::string name(Vertex v) { return "#" + std::to_string(v.id); }

std::vector<Vertex> drop_last(std::vector<Vertex> v) {
  v.pop_back();
  return v;
}

}  // namespace

Vertex pick_partner(const Piece& p, Vertex x, const std::set<Vertex>& keep) {
  auto [a, b] = p.cycle.neighbors(x);
  if (b < a) std::swap(a, b);
  std::optional<Vertex> fallback;
  for (Vertex c : {a, b}) {
    if (!p.graph.has_edge(x, c)) continue;
    if (!keep.count(c)) return c;
    if (!fallback) fallback = c;
  }
  if (!fallback) throw Error(ErrorCode::kWitnessMismatch, "no cycle edge of the graph at " + name(x));
  return *fallback;
}

std::optional<Edge> first_neighbor_edge(const Piece& p, Vertex x) {
  auto edges = p.cycle.edges();
  std::sort(edges.begin(), edges.end());
  for (const Edge& e : edges) {
    if (e.u != x && e.v != x && p.graph.has_edge(x, e.u) && p.graph.has_edge(x, e.v)) return e;
  }
  return std::nullopt;
}

Piece glue_merge(const Piece& p1, const Piece& p2, Vertex x, Vertex a1, Vertex b1) {
  // a1 ... a2 x b2 ... b1, closing b1-a1
  std::vector<Vertex> order = p1.cycle.walk(a1, x);
  if (order.back() != x) throw Error(ErrorCode::kWitnessMismatch, name(a1) + " is not next to " + name(x));
  const auto tail = p2.cycle.walk(x, b1);
  if (tail.back() != b1) throw Error(ErrorCode::kWitnessMismatch, name(b1) + " is not next to " + name(x));
  order.insert(order.end(), tail.begin() + 1, tail.end());
  Graph host = graph_union(p1.graph, p2.graph);
  HamCycle c = HamCycle::from_order(host, std::move(order));
  return Piece{std::move(host), std::move(c)};
}

Piece glue_pendant(const Piece& p, Vertex x, Vertex y, Vertex u) {
  // z ... y u x, closing x-z
  auto [prev, next] = p.cycle.neighbors(x);
  if (prev != y && next != y) throw Error(ErrorCode::kWitnessMismatch, name(y) + " is not next to " + name(x));
  const Vertex z = prev == y ? next : prev;
  std::vector<Vertex> order = drop_last(p.cycle.walk(z, x));
  order.push_back(u);
  order.push_back(x);
  Graph host = add_pendant(p.graph, x, u);
  HamCycle c = HamCycle::from_order(host, std::move(order));
  return Piece{std::move(host), std::move(c)};
}

Piece glue_pendant_cross(const Piece& p, Vertex x, Edge yw, Vertex u) {
  // y ... w u, closing u-y
  if (!p.cycle.has_edge(yw.u, yw.v) || !p.graph.has_edge(x, yw.u) || !p.graph.has_edge(x, yw.v)) {
    throw Error(ErrorCode::kWitnessMismatch, "cycle edge does not join two neighbors of " + name(x));
  }
  std::vector<Vertex> order = p.cycle.walk(yw.u, yw.v);
  order.push_back(u);
  Graph host = add_pendant(p.graph, x, u);
  HamCycle c = HamCycle::from_order(host, std::move(order));
  return Piece{std::move(host), std::move(c)};
}

Piece glue_cross(const Piece& p1, const Piece& p2, Vertex x, Edge yw) {
  // w ... x ... y a ... b, closing b-w
  if (!p1.cycle.has_edge(yw.u, yw.v) || !p1.graph.has_edge(x, yw.u) || !p1.graph.has_edge(x, yw.v)) {
    throw Error(ErrorCode::kWitnessMismatch, "cycle edge does not join two neighbors of " + name(x));
  }
  if (p2.cycle.in_g_count(x) != 2) {
    throw Error(ErrorCode::kWitnessMismatch, "second cycle lacks two graph edges at " + name(x));
  }
  const Vertex y = yw.u;
  const Vertex w = yw.v;
  std::vector<Vertex> order = p1.cycle.walk(w, y);
  const Vertex a = p2.cycle.neighbors(x).second;
  const auto tail = drop_last(p2.cycle.walk(a, x));
  order.insert(order.end(), tail.begin(), tail.end());
  Graph host = graph_union(p1.graph, p2.graph);
  HamCycle c = HamCycle::from_order(host, std::move(order));
  return Piece{std::move(host), std::move(c)};
}

Piece strip_pendant(const Piece& piece, Vertex leaf, Vertex at) {
  auto [q1, q2] = piece.cycle.neighbors(leaf);
  const Graph& g = piece.graph;
  auto near = [&](Vertex q) { return q == at || g.has_edge(at, q); };
  if (!near(q1) || !near(q2)) {
    throw Error(ErrorCode::kConstructionDefect, "pendant " + name(leaf) + " has a cycle neighbor away from " + name(at));
  }
  std::vector<Vertex> order;
  for (Vertex v : piece.cycle.order()) {
    if (v != leaf) order.push_back(v);
  }
  const Vertex gone[] = {leaf};
  Graph host = without(g, gone);
  HamCycle c = HamCycle::from_order(host, std::move(order));
  return Piece{std::move(host), std::move(c)};
}

}  // namespace detail

namespace {

using detail::Piece;

void check_spans(const Graph& g, const HamCycle& c, const char* which) {
  bool ok = c.size() == g.order();
  for (Vertex v : c.order()) ok = ok && g.contains(v);
  if (!ok) throw Error(ErrorCode::kWitnessMismatch, std::string(which) + " cycle does not span its graph");
}

HamCycle rename_in_cycle(const Graph& host, const HamCycle& c, Vertex from, Vertex to) {
  std::vector<Vertex> order(c.order().begin(), c.order().end());
  std::replace(order.begin(), order.end(), from, to);
  return HamCycle::from_order(host, std::move(order));
}

Piece renamed(const Graph& g, Vertex from, const HamCycle& c, Vertex to, const char* which) {
  check_spans(g, c, which);
  Graph h = rename_vertex(g, from, to);
  HamCycle hc = rename_in_cycle(h, c, from, to);
  return Piece{std::move(h), std::move(hc)};
}

}  // namespace

Composition compose_merge(const Graph& g1, Vertex x1, const HamCycle& c1, const Graph& g2, Vertex x2,
                          const HamCycle& c2, Vertex x) {
  Graph joined = connect(g1, x1, g2, x2, x);
  Piece p1 = renamed(g1, x1, c1, x, "first");
  Piece p2 = renamed(g2, x2, c2, x, "second");
  const Vertex a1 = detail::pick_partner(p1, x);
  const Vertex b1 = detail::pick_partner(p2, x);
  Piece out = detail::glue_merge(p1, p2, x, a1, b1);
  return Composition{std::move(joined), std::move(out.cycle)};
}

Composition compose_pendant(const Graph& g1, Vertex x1, const HamCycle& c1, PendantWitness kind, Vertex u,
                            Vertex x) {
  if (!g1.contains(x1)) throw Error(ErrorCode::kVertexNotFound, "x1 not in graph");
  if (u == x || g1.contains(u) || g1.contains(x)) {
    throw Error(ErrorCode::kFreshLabelCollision, "pendant and merged labels must be new and distinct");
  }
  Piece p = renamed(g1, x1, c1, x, "first");
  Piece out;
  if (kind == PendantWitness::kType12) {
    out = detail::glue_pendant(p, x, detail::pick_partner(p, x), u);
  } else {
    auto e = detail::first_neighbor_edge(p, x);
    if (!e) throw Error(ErrorCode::kWitnessMismatch, "no cycle edge joins two neighbors of the merge vertex");
    out = detail::glue_pendant_cross(p, x, *e, u);
  }
  return Composition{std::move(out.graph), std::move(out.cycle)};
}

Composition compose_cross(const Graph& g1, Vertex x1, const HamCycle& c1, const Graph& g2, Vertex x2,
                          const HamCycle& c2, Vertex x) {
  Graph joined = connect(g1, x1, g2, x2, x);
  Piece p1 = renamed(g1, x1, c1, x, "first");
  Piece p2 = renamed(g2, x2, c2, x, "second");
  auto e = detail::first_neighbor_edge(p1, x);
  if (!e) throw Error(ErrorCode::kWitnessMismatch, "no cycle edge joins two neighbors of the merge vertex");
  Piece out = detail::glue_cross(p1, p2, x, *e);
  return Composition{std::move(joined), std::move(out.cycle)};
}

}  // namespace hamsq
