#include <string>

#include "glue.hpp"
#include "hamsq/blocks.hpp"
#include "hamsq/engine.hpp"
#include "hamsq/error.hpp"

namespace hamsq {

namespace {

std::optional<Vertex> high_t_vertex(const BlockDecomposition& bd) {
  for (Vertex c : bd.cut_vertices()) {
    if (t_count(bd, c) >= 3) return c;
  }
  return std::nullopt;
}

Certificate oracle(const Graph& g, const BlockDecomposition& bd, Certificate cert, const EngineOptions& options) {
  detail::require_within_cap(g, options, "graph");
  const auto high = high_t_vertex(bd);
  std::optional<HamCycle> found;
  if (cert.preconditions.in_class && !high) {
    // Prefer a cycle meeting the branch-point edge counts; fall back to any.
    CycleConstraint c;
    for (Vertex b : bd.branch_points()) {
      const std::size_t t = t_count(bd, b);
      c.require(b, t == 0 ? Requirement::kBothInG : t == 1 ? Requirement::kExactlyOneInG : Requirement::kNoneInG);
    }
    found = detail::search(g, c, options);
  }
  if (!found) found = detail::search(g, CycleConstraint{}, options);
  if (found) {
    cert.decision = Decision::kHamiltonian;
    cert.cycle = std::move(found);
  } else {
    cert.decision = Decision::kNotHamiltonian;
    cert.evidence = high ? Evidence::kHighTVertex : Evidence::kExhaustiveSearch;
    cert.witness_vertex = high;
  }
  return cert;
}

}  // namespace

Certificate decide_and_construct(const Graph& g, Mode mode, const EngineOptions& options) {
  Certificate cert;
  if (g.order() <= 2) {
    if (!is_connected(g)) throw Error(ErrorCode::kDisconnectedInput, "graph is not connected");
    cert.decision = Decision::kNotHamiltonian;
    cert.evidence = Evidence::kTooSmall;
    return cert;
  }
  const BlockDecomposition bd = decompose(g);
  cert.preconditions = check_main_preconditions(bd);
  if (mode == Mode::kOracle) return oracle(g, bd, std::move(cert), options);

  if (!cert.preconditions.in_class) {
    cert.decision = Decision::kOutOfClass;
    return cert;
  }
  if (auto high = high_t_vertex(bd)) {
    cert.decision = Decision::kNotHamiltonian;
    cert.evidence = Evidence::kHighTVertex;
    cert.witness_vertex = high;
    return cert;
  }
  cert.cycle = construct_in_class(g, options, &cert.trace);
  cert.decision = Decision::kHamiltonian;
  return cert;
}

std::string to_string(Decision d) {
  switch (d) {
    case Decision::kHamiltonian: return "hamiltonian";
    case Decision::kNotHamiltonian: return "not_hamiltonian";
    case Decision::kOutOfClass: return "out_of_class";
  }
  return "out_of_class";
}

std::string to_string(Evidence e) {
  switch (e) {
    case Evidence::kNone: return "none";
    case Evidence::kHighTVertex: return "high_t_vertex";
    case Evidence::kTooSmall: return "too_small";
    case Evidence::kExhaustiveSearch: return "exhaustive_search";
  }
  return "none";
}

}  // namespace hamsq
