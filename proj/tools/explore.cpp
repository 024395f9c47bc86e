#include "explore.hpp"

#include <bit>
#include <string>
#include <vector>

#include "hamsq/io.hpp"

namespace hamsq {

namespace {

Graph with_legs(const Graph& block, const std::vector<Vertex>& at, unsigned triangles) {
  std::vector<Vertex> vs(block.vertices().begin(), block.vertices().end());
  std::vector<Edge> es = block.edges();
  std::uint32_t next = static_cast<std::uint32_t>(block.order());
  for (std::size_t i = 0; i < at.size(); ++i) {
    const Vertex a{next++};
    vs.push_back(a);
    es.push_back(Edge::of(at[i], a));
    if (triangles >> i & 1U) {
      const Vertex b{next++};
      vs.push_back(b);
      es.push_back(Edge::of(at[i], b));
      es.push_back(Edge::of(a, b));
    }
  }
  return Graph(vs, es);
}

}  // namespace

int explore_conjecture(const ExploreOptions& options, std::ostream& out) {
  std::size_t instances = 0, hamiltonian = 0, undetermined = 0;
  std::vector<Graph> found;
  bool stopped = false;
  SearchOptions so;
  so.budget = options.budget;
  for (int s = 3; s <= options.max_block && !stopped; ++s) {
    for (const Graph& block : biconnected_graphs(s)) {
      for (unsigned mask = 1; mask < (1U << s) && !stopped; ++mask) {
        const int d = std::popcount(mask);
        if (d > options.legs) continue;
        std::vector<Vertex> at;
        for (int i = 0; i < s; ++i) {
          if (mask >> i & 1U) at.push_back(Vertex{static_cast<std::uint32_t>(i)});
        }
        for (unsigned tri = 0; tri < (1U << d); ++tri) {
          if (instances == options.limit) {
            stopped = true;
            break;
          }
          ++instances;
          const Graph g = with_legs(block, at, tri);
          const SearchResult r = find_ham_cycle_constrained(g, CycleConstraint{}, so);
          if (r.cycle) {
            ++hamiltonian;
          } else if (r.status == SearchStatus::kBudgetExceeded) {
            ++undetermined;
          } else {
            found.push_back(g);
          }
        }
      }
      if (stopped) break;
    }
  }
  out << "instances " << instances << (stopped ? " (limit reached)" : "") << '\n';
  out << "hamiltonian " << hamiltonian << '\n';
  out << "not_hamiltonian " << found.size() << '\n';
  out << "undetermined " << undetermined << '\n';
  for (std::size_t i = 0; i < found.size(); ++i) {
    LabeledGraph lg = label_by_id(found[i], "found" + std::to_string(i));
    out << write_edge_list(lg);
  }
  return 0;
}

}  // namespace hamsq
