#include <charconv>
#include <random>
#include <set>

#include "hamsq/error.hpp"
#include "hamsq/io.hpp"

namespace hamsq {

namespace {

using EdgeLabels = std::vector<std::pair<std::string, std::string>>;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::kBadParams, what); }

long parse_int(std::string_view s, std::string_view what) {
  long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || p != s.data() + s.size()) bad("expected an integer for " + std::string(what));
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

// Appends the blocks of `spec` starting at `start`; new vertices are
// prefix1, prefix2, ...
void add_chain(EdgeLabels& edges, const std::string& start, std::string_view spec, const std::string& prefix) {
  int next = 1;
  std::string at = start;
  for (std::string_view tok : split(spec, '-')) {
    const bool complete = !tok.empty() && tok.back() == '+';
    if (complete) tok.remove_suffix(1);
    const long k = parse_int(tok, "block size");
    if (k < 2 || k > 64) bad("block sizes must lie in 2..64");
    std::vector<std::string> vs{at};
    for (long i = 1; i < k; ++i) vs.push_back(prefix + std::to_string(next++));
    if (complete || k == 2) {
      for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) edges.emplace_back(vs[i], vs[j]);
      }
    } else {
      for (std::size_t i = 0; i < vs.size(); ++i) edges.emplace_back(vs[i], vs[(i + 1) % vs.size()]);
    }
    at = vs.back();
  }
}

}  // namespace

LabeledGraph figure1() {
  return make_labeled("figure1", {{"v1", "v9"}, {"v9", "v8"}, {"v8", "v1"},
                                  {"v1", "v4"}, {"v4", "v2"}, {"v2", "v1"},
                                  {"v1", "v5"}, {"v5", "v7"}, {"v7", "v1"},
                                  {"v9", "v10"}, {"v2", "v3"}, {"v5", "v6"}});
}

LabeledGraph figure2(const std::array<int, 5>& sizes) {
  EdgeLabels edges;
  for (int i = 0; i < 5; ++i) {
    if (sizes[static_cast<std::size_t>(i)] < 2) bad("figure2 clique sizes must be at least 2");
    const std::string p = "p" + std::to_string(i + 1);
    edges.emplace_back("l", p);
    edges.emplace_back("r", p);
    std::vector<std::string> clique{p};
    for (int j = 1; j < sizes[static_cast<std::size_t>(i)]; ++j) clique.push_back(p + "_" + std::to_string(j));
    for (std::size_t a = 0; a < clique.size(); ++a) {
      for (std::size_t b = a + 1; b < clique.size(); ++b) edges.emplace_back(clique[a], clique[b]);
    }
  }
  std::string name = "figure2";
  for (int s : sizes) name += "_" + std::to_string(s);
  return make_labeled(name, edges);
}

LabeledGraph block_path(std::string_view spec) {
  EdgeLabels edges;
  add_chain(edges, "v0", spec, "v");
  return make_labeled("block_path", edges);
}

LabeledGraph star_cut(std::string_view spec) {
  EdgeLabels edges;
  int leg = 0;
  for (std::string_view s : split(spec, '/')) add_chain(edges, "c", s, "l" + std::to_string(++leg) + "_");
  return make_labeled("star_cut", edges);
}

LabeledGraph random_connected(std::uint64_t seed, int n) {
  if (n < 1 || n > 64) bad("random graphs need 1..64 vertices");
  std::mt19937_64 rng(seed);
  std::set<std::pair<int, int>> es;
  for (int i = 1; i < n; ++i) es.emplace(static_cast<int>(rng() % static_cast<std::uint64_t>(i)), i);
  const auto extra = rng() % static_cast<std::uint64_t>(n / 2 + 1);
  for (std::uint64_t k = 0; k < extra; ++k) {
    const int a = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    const int b = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    if (a != b) es.emplace(std::min(a, b), std::max(a, b));
  }
  EdgeLabels edges;
  for (auto [a, b] : es) edges.emplace_back("v" + std::to_string(a), "v" + std::to_string(b));
  return make_labeled("random_" + std::to_string(seed) + "_" + std::to_string(n), edges, {"v0"});
}

LabeledGraph generate(std::string_view family) {
  const auto colon = family.find(':');
  const std::string_view kind = family.substr(0, colon);
  const std::string_view args = colon == std::string_view::npos ? std::string_view{} : family.substr(colon + 1);
  if (kind == "figure1") {
    if (!args.empty()) bad("figure1 takes no parameters");
    return figure1();
  }
  if (kind == "figure2") {
    const auto parts = split(args, ',');
    if (parts.size() != 5) bad("figure2 needs five clique sizes");
    std::array<int, 5> sizes{};
    for (std::size_t i = 0; i < 5; ++i) {
      const long v = parse_int(parts[i], "clique size");
      if (v < 2 || v > 20) bad("figure2 clique sizes must lie in 2..20");
      sizes[i] = static_cast<int>(v);
    }
    return figure2(sizes);
  }
  if (kind == "block-path") return block_path(args);
  if (kind == "star-cut") return star_cut(args);
  if (kind == "random") {
    const auto parts = split(args, ',');
    if (parts.size() != 2) bad("random needs seed,n");
    auto value = [](std::string_view s, std::string_view key) {
      const std::string k = std::string(key) + "=";
      if (s.substr(0, k.size()) == k) s.remove_prefix(k.size());
      return s;
    };
    const long seed = parse_int(value(parts[0], "seed"), "seed");
    const long n = parse_int(value(parts[1], "n"), "n");
    if (seed < 0) bad("seed must be non-negative");
    return random_connected(static_cast<std::uint64_t>(seed), static_cast<int>(n));
  }
  bad("unknown family '" + std::string(kind) + "'");
}

}  // namespace hamsq
