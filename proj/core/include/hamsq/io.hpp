#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hamsq/engine.hpp"
#include "hamsq/graph.hpp"

namespace hamsq {

/// A graph whose vertex ids are 0..n-1, assigned to labels in natural
/// order ("v2" < "v10").
struct LabeledGraph {
  std::string name = "g";
  Graph graph;
  std::vector<std::string> labels;

  const std::string& label(Vertex v) const { return labels.at(v.id); }
  /// Throws kVertexNotFound.
  Vertex vertex(std::string_view label) const;
  std::optional<Vertex> find(std::string_view label) const;
};

/// Digit runs compare by numeric value, everything else bytewise.
bool natural_less(std::string_view a, std::string_view b);

/// Builds ids from labels. Throws kInvalidGraph on loops or repeated edges.
LabeledGraph make_labeled(std::string name, const std::vector<std::pair<std::string, std::string>>& edges,
                          const std::vector<std::string>& isolated = {});

/// Plain graphs get labels equal to their ids.
LabeledGraph label_by_id(const Graph& g, std::string name = "g");

// --- edge lists -------------------------------------------------------------
//
//   # comment
//   graph <name> <n> <m>
//   <u> <v>          (m lines)
//
// Labels listed in no edge cannot be expressed, so n must equal the number
// of distinct labels on edge lines.

/// Throws kMalformedInput.
LabeledGraph parse_edge_list(std::istream& in);
LabeledGraph parse_edge_list(std::string_view text);
std::string write_edge_list(const LabeledGraph& g);

// --- certificates -----------------------------------------------------------

std::string certificate_to_json(const LabeledGraph& g, const Certificate& cert);
/// Labels are resolved against `g`. Throws kMalformedInput.
Certificate certificate_from_json(const LabeledGraph& g, std::string_view text);

// --- DOT --------------------------------------------------------------------

struct DotOptions {
  bool square = false;
  const HamCycle* cycle = nullptr;
};

std::string to_dot(const LabeledGraph& g, const DotOptions& options = {});

// --- generators -------------------------------------------------------------

/// Three triangles sharing v1 with pendant edges at v2, v5 and v9.
LabeledGraph figure1();

/// Center block K_{2,5} on l, r and p1..p5; each p_i lies in a clique of
/// n_i vertices (p_i plus p<i>_1 .. p<i>_{n_i - 1}). Each n_i must be >= 2.
LabeledGraph figure2(const std::array<int, 5>& sizes);

/// Chain of blocks glued at consecutive cut vertices. `spec` lists block
/// sizes separated by '-'; 2 is an edge, k >= 3 a cycle C_k, "k+" a K_k.
LabeledGraph block_path(std::string_view spec);

/// Legs at one center vertex; each leg is a block_path spec and the legs
/// are separated by '/'. The center is the first vertex of every leg.
LabeledGraph star_cut(std::string_view spec);

/// Random spanning tree on n vertices plus extra edges, deterministic in
/// (seed, n) on every platform.
LabeledGraph random_connected(std::uint64_t seed, int n);

/// "figure1", "figure2:n1,..,n5", "block-path:spec", "star-cut:spec",
/// "random:seed,n" (also "random:seed=S,n=N"). Throws kBadParams.
LabeledGraph generate(std::string_view family);

// --- small-graph catalog ----------------------------------------------------

/// All connected graphs on n vertices (ids 0..n-1), one per isomorphism class.
std::vector<Graph> connected_graphs(int n);

/// The 2-connected members of connected_graphs(n) (n >= 3).
std::vector<Graph> biconnected_graphs(int n);

}  // namespace hamsq
