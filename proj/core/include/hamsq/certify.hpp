#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hamsq/engine.hpp"
#include "hamsq/graph.hpp"
#include "hamsq/search.hpp"

namespace hamsq {

// Independent re-checking of engine output. Uses only graph primitives, the
// block decomposition and the exact search; never the construction code.

enum class ViolationKind {
  kNotHamiltonian,
  kDistanceViolation,
  kProvenanceMismatch,
  kConstraintViolation,
  kDecisionMismatch,
};

struct Violation {
  ViolationKind kind;
  std::string location;
  std::string detail;
};

struct VerificationReport {
  std::vector<Violation> violations;
  // Set by check_claw_claim when a qualifying induced subgraph is found.
  std::optional<std::vector<Vertex>> witness;

  bool ok() const { return violations.empty(); }
  void add(ViolationKind kind, std::string location, std::string detail) {
    violations.push_back(Violation{kind, std::move(location), std::move(detail)});
  }
  void merge(const VerificationReport& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
};

std::string to_string(ViolationKind kind);

/// Every vertex exactly once, consecutive vertices at distance <= 2 in g,
/// provenance flags equal to edge membership in g.
VerificationReport verify_ham_cycle_in_square(const Graph& g, const HamCycle& c);

/// Re-checks every requirement of `cc` against the edges of g.
/// Throws kConstraintOnMissingVertex.
VerificationReport verify_edge_conditions(const Graph& g, const HamCycle& c, const CycleConstraint& cc);

struct VerifyOptions {
  std::size_t oracle_cap = 12;
  std::uint64_t budget = SearchOptions::kDefaultBudget;
};

/// Hamiltonian: cycle re-verified, and for in-class graphs every branch cut
/// vertex a has exactly 2 - t(a) cycle edges in g. Not hamiltonian: the
/// witness is re-checked and, up to the oracle cap, exhaustive search must
/// find no cycle. Out of class: the precondition failure is recomputed.
VerificationReport verify_decision(const Graph& g, const Certificate& cert, const VerifyOptions& options = {});

/// ok iff g has an induced subdivided claw with at most two of its edges in
/// any single block of degree <= 2, and square(g) is hamiltonian. Candidates
/// are enumerated by center, then neighbor triple, then second-level
/// vertices, all ascending. Throws kSizeCapExceeded above `cap` vertices.
VerificationReport check_claw_claim(const Graph& g, std::size_t cap = 12);

/// The 7-vertex subdivided claw on ids 0..6 with center 0.
Graph subdivided_claw();

}  // namespace hamsq
