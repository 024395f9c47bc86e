#include <algorithm>
#include <map>
#include <mutex>

#include "hamsq/blocks.hpp"
#include "hamsq/error.hpp"
#include "hamsq/io.hpp"

namespace hamsq {

namespace {

constexpr int kMaxCatalogOrder = 10;

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// Color refinement, three rounds; isomorphic graphs hash equally.
std::uint64_t refinement_hash(const Graph& g) {
  const int n = static_cast<int>(g.order());
  std::vector<std::uint64_t> color(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) color[static_cast<std::size_t>(i)] = g.neighbor_indices(i).size();
  for (int round = 0; round < 3; ++round) {
    std::vector<std::uint64_t> next(color.size());
    for (int i = 0; i < n; ++i) {
      std::vector<std::uint64_t> around;
      for (int j : g.neighbor_indices(i)) around.push_back(color[static_cast<std::size_t>(j)]);
      std::sort(around.begin(), around.end());
      std::uint64_t h = color[static_cast<std::size_t>(i)];
      for (auto c : around) h = mix(h, c);
      next[static_cast<std::size_t>(i)] = h;
    }
    color = std::move(next);
  }
  std::sort(color.begin(), color.end());
  std::uint64_t h = static_cast<std::uint64_t>(n) * 1000003ULL + g.size();
  for (auto c : color) h = mix(h, c);
  return h;
}

const std::vector<Graph>& level(int n) {
  static std::mutex mu;
  static std::vector<std::vector<Graph>> levels;
  std::lock_guard<std::mutex> lock(mu);
  if (levels.empty()) levels.push_back({Graph({Vertex{0}}, {})});
  while (static_cast<int>(levels.size()) < n) {
    const int k = static_cast<int>(levels.size());  // order of the graphs being extended
    std::map<std::uint64_t, std::vector<std::size_t>> buckets;
    std::vector<Graph> out;
    for (const Graph& g : levels.back()) {
      std::vector<Vertex> vs(g.vertices().begin(), g.vertices().end());
      vs.push_back(Vertex{static_cast<std::uint32_t>(k)});
      const auto base = g.edges();
      for (std::uint32_t mask = 1; mask < (1U << k); ++mask) {
        std::vector<Edge> es = base;
        for (int i = 0; i < k; ++i) {
          if (mask >> i & 1U) es.push_back(Edge{Vertex{static_cast<std::uint32_t>(i)}, Vertex{static_cast<std::uint32_t>(k)}});
        }
        Graph h(vs, es);
        auto& bucket = buckets[refinement_hash(h)];
        const bool seen = std::any_of(bucket.begin(), bucket.end(),
                                      [&](std::size_t idx) { return is_isomorphic_small(out[idx], h, kMaxCatalogOrder); });
        if (seen) continue;
        bucket.push_back(out.size());
        out.push_back(std::move(h));
      }
    }
    levels.push_back(std::move(out));
  }
  return levels[static_cast<std::size_t>(n - 1)];
}

}  // namespace

std::vector<Graph> connected_graphs(int n) {
  if (n < 1 || n > kMaxCatalogOrder) throw Error(ErrorCode::kBadParams, "catalog covers 1..10 vertices");
  return level(n);
}

std::vector<Graph> biconnected_graphs(int n) {
  if (n < 3) throw Error(ErrorCode::kBadParams, "2-connected graphs need at least 3 vertices");
  std::vector<Graph> out;
  for (const Graph& g : connected_graphs(n)) {
    if (decompose(g).block_count() == 1) out.push_back(g);
  }
  return out;
}

}  // namespace hamsq
