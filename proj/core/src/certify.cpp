#include "hamsq/certify.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "hamsq/blocks.hpp"
#include "hamsq/error.hpp"

namespace hamsq {

namespace {

std::string name(Vertex v) { return "#" + std::to_string(v.id); }

bool within_two(const Graph& g, Vertex a, Vertex b) {
  if (g.has_edge(a, b)) return true;
  for (Vertex w : g.neighbors(a)) {
    if (g.has_edge(w, b)) return true;
  }
  return false;
}

std::optional<HamCycle> oracle_cycle(const Graph& g, std::uint64_t budget, bool& exhausted) {
  SearchOptions so;
  so.budget = budget;
  auto r = find_ham_cycle_constrained(g, CycleConstraint{}, so);
  exhausted = r.status == SearchStatus::kBudgetExceeded;
  return r.cycle;
}

}  // namespace

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kNotHamiltonian: return "NotHamiltonian";
    case ViolationKind::kDistanceViolation: return "DistanceViolation";
    case ViolationKind::kProvenanceMismatch: return "ProvenanceMismatch";
    case ViolationKind::kConstraintViolation: return "ConstraintViolation";
    case ViolationKind::kDecisionMismatch: return "DecisionMismatch";
  }
  return "Unknown";
}

VerificationReport verify_ham_cycle_in_square(const Graph& g, const HamCycle& c) {
  VerificationReport r;
  const auto order = c.order();
  const auto prov = c.provenance();
  std::set<Vertex> seen;
  for (Vertex v : order) {
    if (!g.contains(v)) r.add(ViolationKind::kNotHamiltonian, name(v), "vertex not in graph");
    if (!seen.insert(v).second) r.add(ViolationKind::kNotHamiltonian, name(v), "vertex repeated");
  }
  for (Vertex v : g.vertices()) {
    if (!seen.count(v)) r.add(ViolationKind::kNotHamiltonian, name(v), "vertex missing from cycle");
  }
  if (order.size() < 3) r.add(ViolationKind::kNotHamiltonian, "cycle", "fewer than 3 vertices");
  if (prov.size() != order.size()) r.add(ViolationKind::kProvenanceMismatch, "cycle", "flag count differs from length");
  if (!r.ok()) return r;
  const std::size_t n = order.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex a = order[i];
    const Vertex b = order[(i + 1) % n];
    const std::string where = name(a) + "-" + name(b);
    if (!within_two(g, a, b)) {
      const auto d = distance(g, a, b);
      r.add(ViolationKind::kDistanceViolation, where, d ? "distance " + std::to_string(*d) : "different components");
    }
    const bool edge = g.has_edge(a, b);
    if (edge != (prov[i] == Provenance::kInG)) {
      r.add(ViolationKind::kProvenanceMismatch, where, edge ? "edge of G flagged square-only" : "non-edge flagged in G");
    }
  }
  return r;
}

VerificationReport verify_edge_conditions(const Graph& g, const HamCycle& c, const CycleConstraint& cc) {
  for (const auto& [v, req] : cc.requirements) {
    if (!g.contains(v)) throw Error(ErrorCode::kConstraintOnMissingVertex, name(v));
  }
  for (const auto* set : {&cc.required_edges, &cc.forbidden_edges}) {
    for (const Edge& e : *set) {
      if (!g.contains(e.u) || !g.contains(e.v)) throw Error(ErrorCode::kConstraintOnMissingVertex, name(e.u) + "-" + name(e.v));
    }
  }
  VerificationReport r;
  const auto edges = c.edges();
  for (const auto& [v, req] : cc.requirements) {
    if (!c.contains(v)) {
      r.add(ViolationKind::kConstraintViolation, name(v), "vertex not on cycle");
      continue;
    }
    auto [p, q] = c.neighbors(v);
    const int count = static_cast<int>(g.has_edge(v, p)) + static_cast<int>(g.has_edge(v, q));
    bool ok = true;
    switch (req) {
      case Requirement::kFree: break;
      case Requirement::kBothInG: ok = count == 2; break;
      case Requirement::kExactlyOneInG: ok = count == 1; break;
      case Requirement::kAtLeastOneInG: ok = count >= 1; break;
      case Requirement::kNoneInG: ok = count == 0; break;
      case Requirement::kNeighborEdge:
        ok = std::any_of(edges.begin(), edges.end(),
                         [&](const Edge& e) { return g.has_edge(v, e.u) && g.has_edge(v, e.v); });
        break;
    }
    if (!ok) {
      r.add(ViolationKind::kConstraintViolation, name(v),
            "requirement not met (" + std::to_string(count) + " cycle edges in G)");
    }
  }
  for (const Edge& e : cc.required_edges) {
    if (!c.has_edge(e.u, e.v)) r.add(ViolationKind::kConstraintViolation, name(e.u) + "-" + name(e.v), "required edge missing");
  }
  for (const Edge& e : cc.forbidden_edges) {
    if (c.has_edge(e.u, e.v)) r.add(ViolationKind::kConstraintViolation, name(e.u) + "-" + name(e.v), "forbidden edge used");
  }
  if (cc.min_in_g_edges > 0) {
    const auto in_g = std::count_if(edges.begin(), edges.end(), [&](const Edge& e) { return g.has_edge(e.u, e.v); });
    if (in_g < cc.min_in_g_edges) {
      r.add(ViolationKind::kConstraintViolation, "cycle", std::to_string(in_g) + " cycle edges in G, fewer than required");
    }
  }
  return r;
}

VerificationReport verify_decision(const Graph& g, const Certificate& cert, const VerifyOptions& options) {
  VerificationReport r;
  if (g.order() <= 2) {
    if (cert.decision != Decision::kNotHamiltonian) {
      r.add(ViolationKind::kDecisionMismatch, "decision", "graphs on at most 2 vertices have no hamiltonian square");
    }
    return r;
  }
  const BlockDecomposition bd = decompose(g);
  const PreconditionReport pre = check_main_preconditions(bd);
  if (pre.in_class != cert.preconditions.in_class) {
    r.add(ViolationKind::kDecisionMismatch, "preconditions", "class membership disagrees with recomputation");
  }
  std::optional<Vertex> high;
  for (Vertex c : bd.cut_vertices()) {
    if (!high && t_count(bd, c) >= 3) high = c;
  }

  switch (cert.decision) {
    case Decision::kHamiltonian: {
      if (!cert.cycle) {
        r.add(ViolationKind::kNotHamiltonian, "cycle", "hamiltonian decision without a cycle");
        return r;
      }
      r.merge(verify_ham_cycle_in_square(g, *cert.cycle));
      if (!r.ok()) return r;
      if (pre.in_class) {
        CycleConstraint counts;
        for (Vertex b : bd.branch_points()) {
          const std::size_t t = t_count(bd, b);
          if (t > 2) continue;
          counts.require(b, t == 0 ? Requirement::kBothInG : t == 1 ? Requirement::kExactlyOneInG : Requirement::kNoneInG);
        }
        r.merge(verify_edge_conditions(g, *cert.cycle, counts));
      }
      if (high) {
        r.add(ViolationKind::kDecisionMismatch, name(*high), "cycle claimed although a vertex lies in 3 acyclic non-end blocks");
      }
      break;
    }
    case Decision::kNotHamiltonian: {
      if (cert.evidence == Evidence::kHighTVertex) {
        if (!cert.witness_vertex || !g.contains(*cert.witness_vertex) || t_count(bd, *cert.witness_vertex) < 3) {
          r.add(ViolationKind::kDecisionMismatch, "witness", "witness vertex does not lie in 3 acyclic non-end blocks");
        }
      } else if (cert.evidence != Evidence::kExhaustiveSearch) {
        r.add(ViolationKind::kDecisionMismatch, "witness", "no usable evidence for non-hamiltonicity");
      }
      if (g.order() <= options.oracle_cap) {
        bool exhausted = false;
        if (oracle_cycle(g, options.budget, exhausted)) {
          r.add(ViolationKind::kDecisionMismatch, "decision", "exhaustive search found a hamiltonian cycle");
        } else if (exhausted) {
          r.add(ViolationKind::kDecisionMismatch, "decision", "exhaustive search ran out of budget");
        }
      } else if (cert.evidence == Evidence::kExhaustiveSearch) {
        r.add(ViolationKind::kDecisionMismatch, "decision", "exhaustive evidence above the oracle cap");
      }
      break;
    }
    case Decision::kOutOfClass:
      if (pre.in_class) r.add(ViolationKind::kDecisionMismatch, "decision", "graph satisfies the class conditions");
      break;
  }
  return r;
}

Graph subdivided_claw() { return Graph::from_pairs({{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}}); }

VerificationReport check_claw_claim(const Graph& g, std::size_t cap) {
  if (g.order() > cap) {
    throw Error(ErrorCode::kSizeCapExceeded, "claw enumeration limited to " + std::to_string(cap) + " vertices");
  }
  VerificationReport r;
  std::optional<BlockDecomposition> bd;
  if (g.order() >= 2 && is_connected(g)) bd = decompose(g);

  // Claw edges per block of degree <= 2, at most two in any one block.
  auto few_in_low_blocks = [&](const std::vector<Edge>& edges) {
    if (!bd) return true;
    for (std::size_t b = 0; b < bd->block_count(); ++b) {
      if (bd->info(b).degree > 2) continue;
      const auto& blk = bd->block(b);
      int inside = 0;
      for (const Edge& e : edges) {
        inside += std::binary_search(blk.begin(), blk.end(), e.u) && std::binary_search(blk.begin(), blk.end(), e.v);
      }
      if (inside > 2) return false;
    }
    return true;
  };

  const Graph claw = subdivided_claw();
  for (Vertex x : g.vertices()) {
    const auto nx = g.neighbors(x);
    if (nx.size() < 3 || r.witness) continue;
    for (std::size_t i = 0; i < nx.size() && !r.witness; ++i) {
      for (std::size_t j = i + 1; j < nx.size() && !r.witness; ++j) {
        for (std::size_t k = j + 1; k < nx.size() && !r.witness; ++k) {
          const std::array<Vertex, 3> mid{nx[i], nx[j], nx[k]};
          if (g.has_edge(mid[0], mid[1]) || g.has_edge(mid[0], mid[2]) || g.has_edge(mid[1], mid[2])) continue;
          std::array<std::vector<Vertex>, 3> outer;
          for (std::size_t m = 0; m < 3; ++m) {
            for (Vertex s : g.neighbors(mid[m])) {
              bool ok = s != x && !g.has_edge(x, s);
              for (std::size_t o = 0; o < 3 && ok; ++o) ok = s != mid[o] && (o == m || !g.has_edge(s, mid[o]));
              if (ok) outer[m].push_back(s);
            }
          }
          for (Vertex s0 : outer[0]) {
            for (Vertex s1 : outer[1]) {
              if (s1 == s0 || g.has_edge(s0, s1) || r.witness) continue;
              for (Vertex s2 : outer[2]) {
                if (s2 == s0 || s2 == s1 || g.has_edge(s0, s2) || g.has_edge(s1, s2)) continue;
                std::vector<Vertex> a{x, mid[0], s0, mid[1], s1, mid[2], s2};
                const Graph h = induced(g, a);
                if (!is_isomorphic_small(h, claw)) continue;
                if (!few_in_low_blocks(h.edges())) continue;
                std::sort(a.begin(), a.end());
                r.witness = a;
                break;
              }
            }
          }
        }
      }
    }
  }
  if (!r.witness) {
    r.add(ViolationKind::kConstraintViolation, "graph", "no induced subdivided claw with at most two edges per low-degree block");
  }
  bool exhausted = false;
  if (g.order() < 3 || !is_connected(g) || !oracle_cycle(g, SearchOptions::kDefaultBudget, exhausted)) {
    r.add(ViolationKind::kNotHamiltonian, "graph", exhausted ? "search budget exhausted" : "square is not hamiltonian");
  }
  return r;
}

}  // namespace hamsq
