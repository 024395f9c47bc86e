#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "hamsq/certify.hpp"
#include "hamsq/engine.hpp"
#include "hamsq/error.hpp"
#include "hamsq/io.hpp"
#include "support.hpp"

using namespace hamsq;
using namespace hamsq::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Failures {
  std::size_t count = 0;
  std::string first;

  void add(const std::string& what) {
    if (count++ == 0) first = what;
  }
  Outcome outcome(const std::string& summary) const {
    if (count == 0) return {true, summary};
    return {false, summary + "; " + std::to_string(count) + " failures, first: " + first};
  }
};

std::string describe(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.order() << " {";
  for (const Edge& e : g.edges()) out << ' ' << e.u.id << '-' << e.v.id;
  out << " }";
  return out.str();
}

std::optional<Vertex> high_t(const Graph& g) {
  const BlockDecomposition bd = decompose(g);
  for (Vertex c : bd.cut_vertices()) {
    if (t_count(bd, c) >= 3) return c;
  }
  return std::nullopt;
}

// 1. The ten-vertex fixture with three triangles at one vertex.
Outcome figure_fixture() {
  const auto start = std::chrono::steady_clock::now();
  const LabeledGraph f = figure1();
  Failures fail;
  const Certificate cert = decide_and_construct(f.graph, Mode::kConstructive);
  if (cert.decision != Decision::kHamiltonian || !cert.cycle || cert.cycle->size() != 10) {
    fail.add("decide did not return a 10-vertex cycle");
  } else if (!verify_decision(f.graph, cert).ok()) {
    fail.add("engine certificate rejected");
  }
  std::vector<Vertex> drawn;
  for (int i = 1; i <= 10; ++i) drawn.push_back(f.vertex("v" + std::to_string(i)));
  if (!verify_ham_cycle_in_square(f.graph, HamCycle::from_order(f.graph, drawn)).ok()) {
    fail.add("cycle v1..v10 rejected");
  }
  const VerificationReport claw = check_claw_claim(f.graph);
  std::vector<Vertex> expected;
  for (const char* l : {"v1", "v2", "v3", "v5", "v6", "v9", "v10"}) expected.push_back(f.vertex(l));
  std::sort(expected.begin(), expected.end());
  if (!claw.ok() || !claw.witness || *claw.witness != expected) fail.add("claw claim witness differs");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 1.0) fail.add("took " + std::to_string(secs) + " s");
  return fail.outcome("decide, drawn cycle and claw witness checked");
}

// 2. A vertex in three acyclic non-end blocks rules out a cycle.
Outcome necessity() {
  std::vector<Graph> pool;
  for (int n = 7; n <= 8; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      if (check_main_preconditions(g).in_class && high_t(g)) pool.push_back(g);
    }
  }
  const std::size_t from_catalog = pool.size();
  for (std::uint64_t seed = 1; pool.size() < 200 && seed < 100000; ++seed) {
    const Graph g = random_connected(seed, 9).graph;
    if (check_main_preconditions(g).in_class && high_t(g)) pool.push_back(g);
  }
  Failures fail;
  if (pool.size() < 200) fail.add("only " + std::to_string(pool.size()) + " instances");
  for (const Graph& g : pool) {
    if (square_hamiltonian(g)) {
      fail.add("oracle found a cycle: " + describe(g));
      continue;
    }
    const Certificate cert = decide_and_construct(g, Mode::kConstructive);
    if (cert.decision != Decision::kNotHamiltonian || !cert.witness_vertex ||
        t_count(g, *cert.witness_vertex) < 3 || !verify_decision(g, cert).ok()) {
      fail.add("bad certificate: " + describe(g));
    }
  }
  return fail.outcome(std::to_string(pool.size()) + " instances (" + std::to_string(from_catalog) +
                      " exhaustive on 7-8 vertices, rest random on 9)");
}

// 3. Constructive decision equals exhaustive search on every in-class graph.
Outcome sufficiency() {
  Failures fail;
  std::size_t checked = 0, ham = 0;
  for (int n = 3; n <= 8; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      if (!check_main_preconditions(g).in_class) continue;
      ++checked;
      const Certificate c = decide_and_construct(g, Mode::kConstructive);
      const Certificate o = decide_and_construct(g, Mode::kOracle);
      if (c.decision != o.decision) {
        fail.add("decisions differ: " + describe(g));
        continue;
      }
      if (c.decision == Decision::kHamiltonian) ++ham;
      if (!verify_decision(g, c).ok()) fail.add("certificate rejected: " + describe(g));
    }
  }
  return fail.outcome(std::to_string(checked) + " in-class graphs on 3-8 vertices, " + std::to_string(ham) +
                      " hamiltonian");
}

// 4. Anchored cycles in every 2-connected graph for every anchor pair.
Outcome anchored_blocks() {
  Failures fail;
  std::size_t calls = 0;
  for (int n = 4; n <= 8; ++n) {
    for (const Graph& b : blocks_of_order(n)) {
      for (Vertex y : b.vertices()) {
        for (Vertex z : b.vertices()) {
          ++calls;
          try {
            const HamCycle c = anchored_block_cycle(b, y, z);
            if (!verify_ham_cycle_in_square(b, c).ok() || !anchored_conditions_hold(b, c, y, z)) {
              fail.add("conditions fail at (" + std::to_string(y.id) + "," + std::to_string(z.id) + ") " + describe(b));
            }
          } catch (const Error& e) {
            fail.add(std::string(e.what()) + " " + describe(b));
          }
        }
      }
    }
  }
  return fail.outcome(std::to_string(calls) + " (graph, y, z) triples on 4-8 vertices");
}

// 5. Vertex types after connecting two graphs.
Outcome composition_types() {
  std::vector<Graph> pool;
  for (int n = 3; n <= 7; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      if (square_hamiltonian(g)) pool.push_back(g);
    }
  }
  EngineOptions wide;
  wide.cap = 14;
  std::vector<std::pair<const Graph*, Vertex>> type3;
  for (const Graph& g : pool) {
    for (Vertex v : g.vertices()) {
      if (classify_vertex_type(g, v, wide).type_index == 3) type3.emplace_back(&g, v);
    }
  }
  Rng rng(5);
  Failures fail;
  std::size_t merges = 0, pendants = 0, crosses = 0;
  const Vertex x{1000}, u{1001};
  auto type_of = [&](const Graph& g, Vertex v) { return classify_vertex_type(g, v, wide).type_index; };
  for (int attempt = 0; attempt < 20000 && merges + pendants + crosses < 900; ++attempt) {
    const int kind = static_cast<int>(pick(rng, 4));
    Graph g1 = pool[pick(rng, pool.size())];
    Vertex x1 = g1.vertex(static_cast<int>(pick(rng, g1.order())));
    if (kind >= 2 && !type3.empty()) {
      const auto& [g, v] = type3[pick(rng, type3.size())];
      g1 = *g;
      x1 = v;
    }
    const Graph g2 = shift(pool[pick(rng, pool.size())], 100);
    const Vertex x2 = g2.vertex(static_cast<int>(pick(rng, g2.order())));
    const VertexType t1 = classify_vertex_type(g1, x1, wide);
    const VertexType t2 = classify_vertex_type(g2, x2, wide);
    const std::string where = describe(g1) + " at " + std::to_string(x1.id) + " / " + describe(g2) + " at " +
                              std::to_string(x2.id);
    try {
      if (kind == 0 && t1.type_index <= 2 && t2.type_index <= 2) {
        ++merges;
        const Composition c = compose_merge(g1, x1, *t1.witness, g2, x2, *t2.witness, x);
        if (!verify_ham_cycle_in_square(c.graph, c.cycle).ok()) fail.add("merge cycle invalid: " + where);
        const int tx = type_of(c.graph, x);
        const int a = t1.type_index, b = t2.type_index;
        if (a == 1 && b == 1 && tx != 1) fail.add("both type 1 gave " + std::to_string(tx) + ": " + where);
        if (a + b == 3 && tx != 2) fail.add("types 1,2 gave " + std::to_string(tx) + ": " + where);
        if (a == 2 && b == 2 && tx < 3) fail.add("both type 2 gave " + std::to_string(tx) + ": " + where);
        for (const auto& [side, merged] : {std::pair<const Graph*, Vertex>{&g1, x1}, std::pair<const Graph*, Vertex>{&g2, x2}}) {
          if (side->order() < 3 || decompose(*side).block_count() != 1) continue;
          for (Vertex v : side->vertices()) {
            if (v != merged && type_of(c.graph, v) != 1) {
              fail.add("2-connected side vertex " + std::to_string(v.id) + " not type 1: " + where);
            }
          }
        }
      } else if ((kind == 1 || kind == 3) && t1.type_index <= 3) {
        ++pendants;
        const Composition c = compose_pendant(g1, x1, *t1.witness,
                                              t1.type_index == 3 ? PendantWitness::kType3 : PendantWitness::kType12, u, x);
        if (!verify_ham_cycle_in_square(c.graph, c.cycle).ok()) fail.add("pendant cycle invalid: " + where);
        if (t1.type_index <= 2) {
          const int tx = type_of(c.graph, x);
          if (tx != t1.type_index) fail.add("pendant at type " + std::to_string(t1.type_index) + " gave " + std::to_string(tx) + ": " + where);
          if (type_of(c.graph, u) != 2) fail.add("pendant vertex not type 2: " + where);
        }
      } else if (kind == 2 && t1.type_index == 3 && t2.type_index == 1) {
        ++crosses;
        const Composition c = compose_cross(g1, x1, *t1.witness, g2, x2, *t2.witness, x);
        if (!verify_ham_cycle_in_square(c.graph, c.cycle).ok()) fail.add("cross cycle invalid: " + where);
      }
    } catch (const Error& e) {
      fail.add(std::string(e.what()) + ": " + where);
    }
  }
  if (merges + pendants < 500) fail.add("only " + std::to_string(merges + pendants) + " compositions");
  return fail.outcome(std::to_string(merges) + " merges, " + std::to_string(pendants) + " pendants, " +
                      std::to_string(crosses) + " cross compositions");
}

// 6. Anchor conditions for block paths.
Outcome block_paths() {
  Rng rng(6);
  Failures fail;
  std::size_t done = 0;
  while (done < 100) {
    std::uint32_t next = 1;
    const int k = 2 + static_cast<int>(pick(rng, 4));
    const Chain ch = random_chain(rng, Vertex{0}, k, next, 5, 35);
    if (next > 12) continue;
    std::vector<Vertex> vs = ch.vertices;
    vs.push_back(Vertex{0});
    const Graph g = from_parts(vs, ch.edges);
    const BlockDecomposition bd = decompose(g);
    auto anchor = [&](const Graph& block) {
      std::vector<Vertex> free;
      for (Vertex v : block.vertices()) {
        if (!bd.is_cut_vertex(v)) free.push_back(v);
      }
      return free[pick(rng, free.size())];
    };
    const Vertex u1 = anchor(ch.blocks.front());
    const Vertex u2 = anchor(ch.blocks.back());
    ++done;
    try {
      const HamCycle c = block_path_cycle(g, u1, u2);
      if (!verify_ham_cycle_in_square(g, c).ok()) fail.add("invalid cycle: " + describe(g));
      for (const auto& [u, block] : {std::pair{u1, &ch.blocks.front()}, std::pair{u2, &ch.blocks.back()}}) {
        const int want = block->order() >= 3 ? 2 : 1;
        if (g_edges_at(g, c, u) != want) fail.add("anchor " + std::to_string(u.id) + " count: " + describe(g));
      }
    } catch (const Error& e) {
      fail.add(std::string(e.what()) + ": " + describe(g));
    }
  }
  return fail.outcome(std::to_string(done) + " block paths up to 12 vertices");
}

std::vector<Graph> cyclic_blocks(int max_size) {
  std::vector<Graph> out;
  for (int s = 3; s <= max_size; ++s) out.insert(out.end(), blocks_of_order(s).begin(), blocks_of_order(s).end());
  return out;
}

// Star of block chains at vertex 0; the first `t` legs start with an edge
// followed by more blocks.
Graph branch_instance(Rng& rng, int t, int legs, std::uint32_t& next) {
  static const std::vector<Graph> edge{complete(2)};
  static const std::vector<Graph> cyclic = cyclic_blocks(5);
  std::vector<Vertex> vs{Vertex{0}};
  std::vector<Edge> es;
  for (int i = 0; i < legs; ++i) {
    Chain ch;
    if (i < t) {
      ch = random_chain(rng, Vertex{0}, 2 + static_cast<int>(pick(rng, 2)), next, 4, 50, &edge);
    } else if (pick(rng, 3) == 0) {
      ch = random_chain(rng, Vertex{0}, 1, next, 4, 100, &edge);
    } else {
      ch = random_chain(rng, Vertex{0}, 1 + static_cast<int>(pick(rng, 2)), next, 4, 40, &cyclic);
    }
    vs.insert(vs.end(), ch.vertices.begin(), ch.vertices.end());
    es.insert(es.end(), ch.edges.begin(), ch.edges.end());
  }
  return from_parts(vs, es);
}

// 7. Edge count 2 - t at the single branch vertex.
Outcome branch_counts() {
  Rng rng(7);
  Failures fail;
  std::size_t done[3] = {0, 0, 0};
  for (int t = 0; t <= 2; ++t) {
    while (done[t] < 100) {
      std::uint32_t next = 1;
      const Graph g = branch_instance(rng, t, 3 + static_cast<int>(pick(rng, 2)), next);
      if (g.order() > 16) continue;
      ++done[t];
      if (t_count(g, Vertex{0}) != static_cast<std::size_t>(t)) {
        fail.add("generator produced wrong t: " + describe(g));
        continue;
      }
      try {
        const HamCycle c = single_branch_cycle(g, Vertex{0});
        if (!verify_ham_cycle_in_square(g, c).ok()) fail.add("invalid cycle: " + describe(g));
        if (g_edges_at(g, c, Vertex{0}) != 2 - t) fail.add("count at branch vertex: " + describe(g));
      } catch (const Error& e) {
        fail.add(std::string(e.what()) + ": " + describe(g));
      }
    }
  }
  return fail.outcome("100 instances each for t = 0, 1, 2");
}

// Every choice of blocks at one cut vertex with `extra` further vertices;
// `rooted` is sorted by block order.
void stars_with(int extra, std::vector<std::pair<const Graph*, std::uint32_t>>& parts, std::size_t min_index,
                const std::vector<std::pair<const Graph*, std::uint32_t>>& rooted,
                const std::function<void(const std::vector<std::pair<const Graph*, std::uint32_t>>&)>& emit) {
  if (extra == 0) {
    if (parts.size() >= 2) emit(parts);
    return;
  }
  for (std::size_t i = min_index; i < rooted.size(); ++i) {
    const int size = static_cast<int>(rooted[i].first->order()) - 1;
    if (size > extra) break;
    parts.push_back(rooted[i]);
    stars_with(extra - size, parts, i, rooted, emit);
    parts.pop_back();
  }
}

// 8. Stars of blocks.
Outcome stars() {
  Failures fail;
  std::size_t plain = 0, subdivided = 0;
  for (int n = 3; n <= 8; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      const BlockDecomposition bd = decompose(g);
      const ShapeReport shape = is_subdivided_star(bd);
      if (bd.cut_vertices().size() == 1) {
        ++plain;
        if (!square_hamiltonian(g)) fail.add("star of blocks not hamiltonian: " + describe(g));
      }
      if (shape.shape == BlockGraphShape::kStarAtCut) {
        ++subdivided;
        const bool expect = t_count(bd, *shape.center_cut) <= 2;
        if (square_hamiltonian(g) != expect) fail.add("t rule fails: " + describe(g));
      }
    }
  }
  static const Graph k2 = complete(2);
  std::vector<std::pair<const Graph*, std::uint32_t>> rooted{{&k2, 0}};
  for (int s = 3; s <= 9; ++s) {
    for (const Graph& b : blocks_of_order(s)) {
      for (std::uint32_t r = 0; r < b.order(); ++r) rooted.emplace_back(&b, r);
    }
  }
  for (int extra = 8; extra <= 9; ++extra) {
    std::vector<std::pair<const Graph*, std::uint32_t>> parts;
    stars_with(extra, parts, 0, rooted, [&](const auto& chosen) {
      std::uint32_t next = 1;
      std::vector<Vertex> vs{Vertex{0}};
      std::vector<Edge> es;
      for (const auto& [b, r] : chosen) {
        std::vector<Vertex> map(b->order());
        for (std::uint32_t j = 0; j < b->order(); ++j) map[j] = j == r ? Vertex{0} : Vertex{next++};
        for (std::uint32_t j = 0; j < b->order(); ++j) {
          if (j != r) vs.push_back(map[j]);
        }
        for (const Edge& e : b->edges()) es.push_back(Edge::of(map[e.u.id], map[e.v.id]));
      }
      const Graph g = from_parts(vs, es);
      ++plain;
      if (!square_hamiltonian(g)) fail.add("star of blocks not hamiltonian: " + describe(g));
    });
  }
  Rng rng(8);
  for (int i = 0; i < 600; ++i) {
    std::uint32_t next = 1;
    const int t = static_cast<int>(pick(rng, 5));
    const Graph g = branch_instance(rng, t, std::max(3, t + static_cast<int>(pick(rng, 2))), next);
    if (g.order() > 12) continue;
    ++subdivided;
    const bool ham = square_hamiltonian(g);
    if (ham != (t <= 2)) fail.add("t rule fails: " + describe(g));
    if (ham) {
      const Certificate cert = decide_and_construct(g, Mode::kConstructive);
      if (cert.decision != Decision::kHamiltonian || !verify_decision(g, cert).ok()) {
        fail.add("construction rejected: " + describe(g));
      }
    }
  }
  return fail.outcome(std::to_string(plain) + " stars of blocks up to 10 vertices, " + std::to_string(subdivided) +
                      " stars centered at a cut vertex");
}

// 9. Stars centered at a block with an acceptable cycle.
Outcome star_blocks() {
  static const std::vector<Graph> cyclic = cyclic_blocks(6);
  Rng rng(9);
  Failures fail;
  std::size_t tried = 0, built = 0;
  while (built < 300 && tried < 20000) {
    const Graph center = cyclic[pick(rng, cyclic.size())];
    std::uint32_t next = static_cast<std::uint32_t>(center.order());
    std::vector<Vertex> vs(center.vertices().begin(), center.vertices().end());
    std::vector<Edge> es = center.edges();
    for (Vertex v : center.vertices()) {
      if (pick(rng, 2) == 0) continue;
      const Chain ch = random_chain(rng, v, 1 + static_cast<int>(pick(rng, 2)), next, 4, 50);
      vs.insert(vs.end(), ch.vertices.begin(), ch.vertices.end());
      es.insert(es.end(), ch.edges.begin(), ch.edges.end());
    }
    if (next > 12) continue;
    ++tried;
    const Graph g = from_parts(vs, es);
    try {
      const BlockDecomposition bd = decompose(g);
      const std::vector<Vertex> members(center.vertices().begin(), center.vertices().end());
      const auto at = std::find(bd.blocks().begin(), bd.blocks().end(), members);
      const auto ac = acceptable_cycle(g, static_cast<std::size_t>(at - bd.blocks().begin()));
      if (!ac) continue;
      ++built;
      std::set<Edge> designated;
      for (auto [v, w] : ac->assignment) {
        if (!center.has_edge(v, w) || !ac->cycle.has_edge(v, w)) fail.add("designated pair not a block cycle edge");
        designated.insert(Edge::of(v, w));
      }
      std::size_t cuts = 0;
      for (Vertex v : center.vertices()) cuts += bd.is_cut_vertex(v);
      if (designated.size() != cuts) fail.add("designated edges not distinct");
      const HamCycle c = star_block_cycle(g, *ac);
      if (!verify_ham_cycle_in_square(g, c).ok()) fail.add("invalid cycle: " + describe(g));
      for (const Edge& e : ac->cycle.edges()) {
        if (!designated.count(e) && !c.has_edge(e.u, e.v)) fail.add("acceptable edge dropped: " + describe(g));
      }
    } catch (const Error& e) {
      fail.add(std::string(e.what()) + ": " + describe(g));
    }
  }
  if (built < 300) fail.add("only " + std::to_string(built) + " instances");
  return fail.outcome(std::to_string(built) + " instances with an acceptable cycle out of " + std::to_string(tried));
}

// 10. Four edges of the block on the cycle.
Outcome four_edges() {
  Failures fail;
  std::size_t count = 0;
  for (int n = 4; n <= 8; ++n) {
    for (const Graph& b : blocks_of_order(n)) {
      ++count;
      try {
        const HamCycle c = four_edge_cycle(b);
        if (!verify_ham_cycle_in_square(b, c).ok() || g_edges_total(b, c) < 4) fail.add(describe(b));
      } catch (const Error& e) {
        fail.add(std::string(e.what()) + ": " + describe(b));
      }
    }
  }
  return fail.outcome(std::to_string(count) + " 2-connected graphs on 4-8 vertices");
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"figure fixture", figure_fixture},
      {"necessity of t <= 2", necessity},
      {"constructive vs exhaustive", sufficiency},
      {"anchored block cycles", anchored_blocks},
      {"composition vertex types", composition_types},
      {"block path anchors", block_paths},
      {"branch vertex edge counts", branch_counts},
      {"stars of blocks", stars},
      {"stars centered at a block", star_blocks},
      {"four block edges", four_edges},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::stoi(argv[i]));
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    if (!only.empty() && !only.count(id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    std::cout << "criterion " << id << " [" << criteria[i].first << "]: " << (o.pass ? "PASS" : "FAIL") << " - "
              << o.detail << " (" << std::fixed << std::setprecision(2) << secs << " s)" << std::endl;
  }
  return all ? 0 : 1;
}
