#include <algorithm>
#include <vector>

#include "hamsq/error.hpp"
#include "hamsq/graph.hpp"

namespace hamsq {

namespace {

struct Matcher {
  const Graph& a;
  const Graph& b;
  std::vector<int> order;  // vertices of a in matching order
  std::vector<int> map_ab;
  std::vector<int> map_ba;
  std::vector<std::size_t> sig_a;
  std::vector<std::size_t> sig_b;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const int u = order[depth];
    for (int w = 0; w < static_cast<int>(b.order()); ++w) {
      if (map_ba[static_cast<std::size_t>(w)] >= 0) continue;
      if (sig_a[static_cast<std::size_t>(u)] != sig_b[static_cast<std::size_t>(w)]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const int p = order[k];
        const int q = map_ab[static_cast<std::size_t>(p)];
        ok = a.has_edge_index(u, p) == b.has_edge_index(w, q);
      }
      if (!ok) continue;
      map_ab[static_cast<std::size_t>(u)] = w;
      map_ba[static_cast<std::size_t>(w)] = u;
      if (extend(depth + 1)) return true;
      map_ab[static_cast<std::size_t>(u)] = -1;
      map_ba[static_cast<std::size_t>(w)] = -1;
    }
    return false;
  }
};

// Degree combined with the sorted multiset of neighbor degrees.
std::vector<std::size_t> signatures(const Graph& g) {
  const int n = static_cast<int>(g.order());
  std::vector<std::size_t> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<std::size_t> nd;
    for (int j : g.neighbor_indices(i)) nd.push_back(g.neighbor_indices(j).size());
    std::sort(nd.begin(), nd.end());
    std::size_t h = g.neighbor_indices(i).size();
    for (std::size_t d : nd) h = h * 31 + d + 1;
    out[static_cast<std::size_t>(i)] = h;
  }
  return out;
}

}  // namespace

bool is_isomorphic_small(const Graph& g1, const Graph& g2, std::size_t cap) {
  if (g1.order() > cap || g2.order() > cap) {
    throw Error(ErrorCode::kSizeCapExceeded, "isomorphism test limited to " + std::to_string(cap) + " vertices");
  }
  if (g1.order() != g2.order() || g1.size() != g2.size()) return false;
  Matcher m{g1, g2, {}, {}, {}, signatures(g1), signatures(g2)};
  auto s1 = m.sig_a;
  auto s2 = m.sig_b;
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  if (s1 != s2) return false;

  // BFS-ish order: each next vertex maximizes links to already chosen ones.
  const int n = static_cast<int>(g1.order());
  std::vector<char> chosen(static_cast<std::size_t>(n), 0);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    int best_links = -1;
    for (int v = 0; v < n; ++v) {
      if (chosen[static_cast<std::size_t>(v)]) continue;
      int links = 0;
      for (int w : g1.neighbor_indices(v)) links += chosen[static_cast<std::size_t>(w)];
      if (links > best_links ||
          (links == best_links && g1.neighbor_indices(v).size() > g1.neighbor_indices(best).size())) {
        best = v;
        best_links = links;
      }
    }
    chosen[static_cast<std::size_t>(best)] = 1;
    m.order.push_back(best);
  }
  m.map_ab.assign(static_cast<std::size_t>(n), -1);
  m.map_ba.assign(static_cast<std::size_t>(n), -1);
  return m.extend(0);
}

}  // namespace hamsq
