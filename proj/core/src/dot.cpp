#include <sstream>

#include "hamsq/io.hpp"

namespace hamsq {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const LabeledGraph& g, const DotOptions& options) {
  std::ostringstream out;
  out << "graph " << quoted(g.name) << " {\n";
  for (Vertex v : g.graph.vertices()) out << "  " << quoted(g.label(v)) << ";\n";
  const Graph sq = options.square || options.cycle ? square(g.graph) : g.graph;
  for (const Edge& e : sq.edges()) {
    const bool in_g = g.graph.has_edge(e.u, e.v);
    const bool on_cycle = options.cycle && options.cycle->has_edge(e.u, e.v);
    if (!in_g && !options.square && !on_cycle) continue;
    out << "  " << quoted(g.label(e.u)) << " -- " << quoted(g.label(e.v)) << " [style=" << (in_g ? "solid" : "dashed");
    if (on_cycle) out << ", color=red, penwidth=2.5";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace hamsq
