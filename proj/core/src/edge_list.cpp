#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "hamsq/error.hpp"
#include "hamsq/io.hpp"

namespace hamsq {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

[[noreturn]] void malformed(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kMalformedInput, "line " + std::to_string(line) + ": " + what);
}

std::size_t parse_count(const std::string& tok, std::size_t line) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size()) malformed(line, "expected a count, got '" + tok + "'");
  return v;
}

}  // namespace

bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && is_digit(a[ie])) ++ie;
      while (je < b.size() && is_digit(b[je])) ++je;
      std::size_t is = i, js = j;
      while (is + 1 < ie && a[is] == '0') ++is;
      while (js + 1 < je && b[js] == '0') ++js;
      if (ie - is != je - js) return ie - is < je - js;
      const auto cmp = a.substr(is, ie - is).compare(b.substr(js, je - js));
      if (cmp != 0) return cmp < 0;
      if (ie - i != je - j) return ie - i < je - j;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[j]);
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

Vertex LabeledGraph::vertex(std::string_view l) const {
  if (auto v = find(l)) return *v;
  throw Error(ErrorCode::kVertexNotFound, "no vertex labeled '" + std::string(l) + "'");
}

std::optional<Vertex> LabeledGraph::find(std::string_view l) const {
  auto it = std::lower_bound(labels.begin(), labels.end(), l,
                             [](const std::string& a, std::string_view b) { return natural_less(a, b); });
  if (it == labels.end() || *it != l) return std::nullopt;
  return Vertex{static_cast<std::uint32_t>(it - labels.begin())};
}

LabeledGraph make_labeled(std::string name, const std::vector<std::pair<std::string, std::string>>& edges,
                          const std::vector<std::string>& isolated) {
  LabeledGraph out;
  out.name = std::move(name);
  std::set<std::string, bool (*)(std::string_view, std::string_view)> seen(natural_less);
  for (const auto& [a, b] : edges) {
    seen.insert(a);
    seen.insert(b);
  }
  seen.insert(isolated.begin(), isolated.end());
  out.labels.assign(seen.begin(), seen.end());
  std::vector<Vertex> vs;
  for (std::uint32_t i = 0; i < out.labels.size(); ++i) vs.push_back(Vertex{i});
  std::vector<Edge> es;
  for (const auto& [a, b] : edges) es.push_back(Edge::of(out.vertex(a), out.vertex(b)));
  out.graph = Graph(std::move(vs), es);
  return out;
}

LabeledGraph label_by_id(const Graph& g, std::string name) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(std::to_string(e.u.id), std::to_string(e.v.id));
  std::vector<std::string> all;
  for (Vertex v : g.vertices()) all.push_back(std::to_string(v.id));
  return make_labeled(std::move(name), edges, all);
}

LabeledGraph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::string> name;
  std::size_t n = 0, m = 0;
  std::vector<std::pair<std::string, std::string>> edges;
  std::set<std::pair<std::string, std::string>> dup;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::vector<std::string> tok;
    for (std::string t; ss >> t;) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '#') continue;
    if (!name) {
      if (tok.size() != 4 || tok[0] != "graph") malformed(lineno, "expected 'graph <name> <n> <m>'");
      name = tok[1];
      n = parse_count(tok[2], lineno);
      m = parse_count(tok[3], lineno);
      continue;
    }
    if (tok.size() != 2) malformed(lineno, "expected '<u> <v>'");
    if (tok[0] == tok[1]) malformed(lineno, "loop at '" + tok[0] + "'");
    auto key = std::minmax(tok[0], tok[1]);
    if (!dup.emplace(key.first, key.second).second) malformed(lineno, "duplicate edge " + tok[0] + " " + tok[1]);
    edges.emplace_back(tok[0], tok[1]);
  }
  if (!name) throw Error(ErrorCode::kMalformedInput, "missing 'graph' header");
  if (edges.size() != m) {
    throw Error(ErrorCode::kMalformedInput,
                "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  LabeledGraph g = make_labeled(*name, edges);
  if (g.graph.order() != n) {
    throw Error(ErrorCode::kMalformedInput,
                "header declares " + std::to_string(n) + " vertices, found " + std::to_string(g.graph.order()));
  }
  return g;
}

LabeledGraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string write_edge_list(const LabeledGraph& g) {
  std::ostringstream out;
  out << "graph " << g.name << ' ' << g.graph.order() << ' ' << g.graph.size() << '\n';
  for (const Edge& e : g.graph.edges()) out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
  return out.str();
}

}  // namespace hamsq
