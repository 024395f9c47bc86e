#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hamsq/blocks.hpp"
#include "hamsq/certify.hpp"
#include "hamsq/engine.hpp"
#include "hamsq/error.hpp"
#include "hamsq/io.hpp"
#include "hamsq/search.hpp"

#include "explore.hpp"

namespace {

using namespace hamsq;

constexpr int kOk = 0;
constexpr int kNotHam = 2;
constexpr int kOutOfClass = 3;
constexpr int kLimits = 4;
constexpr int kUsage = 64;
constexpr int kMalformed = 65;
constexpr int kDefect = 70;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::kMalformedInput, "cannot read '" + path + "'");
    ss << in.rdbuf();
  }
  return ss.str();
}

LabeledGraph read_graph(const std::string& path) { return parse_edge_list(read_text(path)); }

std::size_t default_cap() {
  const char* env = std::getenv("HAMSQ_CAP");
  if (!env || !*env) return EngineOptions::kDefaultCap;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v < 3 || v > 64) throw UsageError("HAMSQ_CAP must be an integer in 3..64");
  return v;
}

std::string labels(const LabeledGraph& g, std::span<const Vertex> vs) {
  std::string out;
  for (Vertex v : vs) out += (out.empty() ? "" : " ") + g.label(v);
  return out;
}

Vertex min_non_cut(const BlockDecomposition& bd, std::size_t b) {
  for (Vertex v : bd.block(b)) {
    if (!bd.is_cut_vertex(v)) return v;
  }
  throw Error(ErrorCode::kConstructionDefect, "endblock without a non-cut vertex");
}

Edge parse_edge(const LabeledGraph& g, const std::string& tok) {
  for (std::size_t i = tok.find('-'); i != std::string::npos; i = tok.find('-', i + 1)) {
    auto a = g.find(tok.substr(0, i));
    auto b = g.find(tok.substr(i + 1));
    if (a && b && *a != *b) return Edge::of(*a, *b);
  }
  throw UsageError("'" + tok + "' is not an edge written u-v over known labels");
}

Vertex parse_vertex(const LabeledGraph& g, const std::string& label) {
  if (auto v = g.find(label)) return *v;
  throw UsageError("unknown vertex '" + label + "'");
}

Certificate certificate_for(const Graph& g, HamCycle cycle, std::vector<TraceStep> trace) {
  Certificate cert;
  cert.decision = Decision::kHamiltonian;
  cert.cycle = std::move(cycle);
  cert.trace = std::move(trace);
  cert.preconditions = check_main_preconditions(g);
  return cert;
}

int decision_code(Decision d) {
  switch (d) {
    case Decision::kHamiltonian: return kOk;
    case Decision::kNotHamiltonian: return kNotHam;
    case Decision::kOutOfClass: return kOutOfClass;
  }
  return kDefect;
}

int analyze(const LabeledGraph& lg) {
  const Graph& g = lg.graph;
  std::cout << "graph " << lg.name << ": " << g.order() << " vertices, " << g.size() << " edges\n";
  const BlockDecomposition bd = decompose(g);
  std::cout << "blocks:\n";
  for (std::size_t b = 0; b < bd.block_count(); ++b) {
    const BlockInfo& info = bd.info(b);
    std::cout << "  B" << b << " [" << labels(lg, bd.block(b)) << "] "
              << (info.kind == BlockKind::kCyclic ? "cyclic" : "acyclic") << " degree=" << info.degree << ' '
              << (info.end_status == EndStatus::kEndBlock ? "end" : "non-end") << '\n';
  }
  std::cout << "cut vertices:\n";
  for (Vertex c : bd.cut_vertices()) {
    std::cout << "  " << lg.label(c) << " blocks=" << bd.blocks_containing(c).size() << " t=" << t_count(bd, c) << '\n';
  }
  const ShapeReport shape = is_subdivided_star(bd);
  std::cout << "block graph: " << to_string(shape.shape);
  if (shape.center_cut) std::cout << " center=" << lg.label(*shape.center_cut);
  if (shape.center_block) std::cout << " center=B" << *shape.center_block;
  std::cout << "\nbranch points: " << labels(lg, bd.branch_points()) << '\n';
  const PreconditionReport pre = check_main_preconditions(bd);
  if (pre.in_class) {
    std::cout << "preconditions: in class\n";
  } else {
    std::cout << "preconditions: violated condition " << pre.violated_condition << ": " << pre.reason << " ["
              << labels(lg, pre.witness) << "]\n";
  }
  return kOk;
}

int construct(const LabeledGraph& lg, const std::string& which, const std::vector<std::string>& anchors,
              const std::string& vertex, const EngineOptions& options) {
  const Graph& g = lg.graph;
  std::vector<TraceStep> trace;
  if (which == "block-path" || which == "thomassen") {
    Vertex u1, u2;
    if (!anchors.empty()) {
      if (anchors.size() != 2) throw UsageError("--anchors takes exactly two labels");
      u1 = parse_vertex(lg, anchors[0]);
      u2 = parse_vertex(lg, anchors[1]);
    } else {
      const BlockDecomposition bd = decompose(g);
      if (bd.block_count() == 1) {
        u1 = g.vertex(0);
        u2 = g.vertex(1);
      } else {
        std::vector<Vertex> ends;
        for (std::size_t b = 0; b < bd.block_count(); ++b) {
          if (bd.info(b).end_status == EndStatus::kEndBlock) ends.push_back(min_non_cut(bd, b));
        }
        if (ends.size() != 2) throw Error(ErrorCode::kBlockGraphNotPath, "block graph is not a path");
        u1 = ends[0];
        u2 = ends[1];
      }
    }
    HamCycle c = block_path_cycle(g, u1, u2, options, &trace);
    std::cout << certificate_to_json(lg, certificate_for(g, std::move(c), std::move(trace)));
    return kOk;
  }
  if (which == "single-branch" || which == "branch-point" || which == "lemma1") {
    Vertex a;
    if (!vertex.empty()) {
      a = parse_vertex(lg, vertex);
    } else {
      const auto bps = decompose(g).branch_points();
      if (bps.size() != 1) throw Error(ErrorCode::kPreconditionViolated, "graph needs exactly one branch cut vertex");
      a = bps[0];
    }
    HamCycle c = single_branch_cycle(g, a, options, &trace);
    std::cout << certificate_to_json(lg, certificate_for(g, std::move(c), std::move(trace)));
    return kOk;
  }
  if (which == "main") {
    Certificate cert = decide_and_construct(g, Mode::kConstructive, options);
    std::cout << certificate_to_json(lg, cert);
    return decision_code(cert.decision);
  }
  if (which == "star-block") {
    auto ac = acceptable_cycle(g, options);
    if (!ac) {
      std::cerr << "no acceptable cycle in the center block\n";
      return kOutOfClass;
    }
    std::cerr << "designated edges:";
    for (auto [v, w] : ac->assignment) std::cerr << ' ' << lg.label(v) << '-' << lg.label(w);
    std::cerr << '\n';
    HamCycle c = star_block_cycle(g, *ac, options, &trace);
    std::cout << certificate_to_json(lg, certificate_for(g, std::move(c), std::move(trace)));
    return kOk;
  }
  throw UsageError("unknown construction '" + which + "'");
}

int verify(const LabeledGraph& lg, const std::string& cert_path, std::size_t cap) {
  const Certificate cert = certificate_from_json(lg, read_text(cert_path));
  VerifyOptions vo;
  vo.oracle_cap = cap;
  const VerificationReport r = verify_decision(lg.graph, cert, vo);
  if (r.ok()) {
    std::cout << "ok\n";
    return kOk;
  }
  for (const Violation& v : r.violations) {
    std::cout << to_string(v.kind) << ' ' << v.location << ": " << v.detail << '\n';
  }
  return 1;
}

int classify(const LabeledGraph& lg, const std::string& vertex, const EngineOptions& options) {
  const VertexType t = classify_vertex_type(lg.graph, parse_vertex(lg, vertex), options);
  std::cout << "type " << t.type_index << '\n';
  if (t.witness) std::cout << "cycle " << labels(lg, t.witness->order()) << '\n';
  if (t.neighbor_edge) std::cout << "neighbor edge " << lg.label(t.neighbor_edge->u) << '-' << lg.label(t.neighbor_edge->v) << '\n';
  return kOk;
}

int oracle(const LabeledGraph& lg, const std::vector<std::string>& req, const std::vector<std::string>& forbid,
           int min_in_g, std::uint64_t budget) {
  CycleConstraint cc;
  for (const auto& e : req) {
    const Edge ed = parse_edge(lg, e);
    cc.require_edge(ed.u, ed.v);
  }
  for (const auto& e : forbid) {
    const Edge ed = parse_edge(lg, e);
    cc.forbid_edge(ed.u, ed.v);
  }
  cc.min_in_g_edges = min_in_g;
  SearchOptions so;
  so.budget = budget;
  const SearchResult r = find_ham_cycle_constrained(lg.graph, cc, so);
  std::cerr << "expansions " << r.expansions << '\n';
  if (r.status == SearchStatus::kBudgetExceeded) {
    std::cout << "budget exceeded\n";
    return kLimits;
  }
  if (!r.cycle) {
    std::cout << "none\n";
    return kNotHam;
  }
  std::cout << "cycle " << labels(lg, r.cycle->order()) << '\n';
  return kOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Hamiltonicity of graph squares: decisions, constructions and certificates"};
  app.require_subcommand(1);
  std::string file, second, mode = "constructive", theorem, vertex, family, certificate;
  std::vector<std::string> anchors, require_edges, forbid_edges;
  std::size_t cap = 0;
  std::uint64_t budget = SearchOptions::kDefaultBudget;
  int min_in_g = 0;
  bool show_square = false;
  ExploreOptions explore;

  auto* c_analyze = app.add_subcommand("analyze", "Blocks, block graph shape, t per cut vertex, class conditions");
  c_analyze->add_option("file", file, "Edge list ('-' for stdin)")->required();

  auto* c_decide = app.add_subcommand("decide", "Decide hamiltonicity of the square and print a certificate");
  c_decide->add_option("file", file, "Edge list ('-' for stdin)")->required();
  c_decide->add_option("--mode", mode, "constructive or oracle")->check(CLI::IsMember({"constructive", "oracle"}));

  auto* c_construct = app.add_subcommand("construct", "Run one named construction and print a certificate");
  c_construct->add_option("file", file, "Edge list ('-' for stdin)")->required();
  c_construct
      ->add_option("--theorem", theorem,
                   "block-path (alias thomassen), single-branch (aliases branch-point, lemma1), main, star-block")
      ->required()
      ->check(CLI::IsMember({"block-path", "thomassen", "single-branch", "branch-point", "lemma1", "main", "star-block"}));
  c_construct->add_option("--anchors", anchors, "u1,u2 for block-path")->delimiter(',');
  c_construct->add_option("--vertex", vertex, "Branch cut vertex for single-branch");

  auto* c_verify = app.add_subcommand("verify", "Check a certificate independently; exit 0 iff it holds");
  c_verify->add_option("graph", file, "Edge list ('-' for stdin)")->required();
  c_verify->add_option("certificate", second, "Certificate JSON")->required();

  auto* c_classify = app.add_subcommand("classify", "Vertex type 1-4 with a witness cycle");
  c_classify->add_option("file", file, "Edge list ('-' for stdin)")->required();
  c_classify->add_option("--vertex", vertex, "Vertex label")->required();

  auto* c_oracle = app.add_subcommand("oracle", "Exact constrained search for a hamiltonian cycle of the square");
  c_oracle->add_option("file", file, "Edge list ('-' for stdin)")->required();
  c_oracle->add_option("--require-edges", require_edges, "Cycle must use these edges (u-v,...)")->delimiter(',');
  c_oracle->add_option("--forbid-edges", forbid_edges, "Cycle must avoid these edges (u-v,...)")->delimiter(',');
  c_oracle->add_option("--min-in-g", min_in_g, "Minimum number of cycle edges in the graph")->check(CLI::NonNegativeNumber);

  auto* c_generate = app.add_subcommand("generate", "Write an instance as an edge list");
  c_generate
      ->add_option("--family", family,
                   "figure1 | figure2:n1,n2,n3,n4,n5 | block-path:spec | star-cut:spec | random:seed,n\n"
                   "figure2: l and r joined to p1..p5, clique i on p<i> and p<i>_1..p<i>_{n_i-1}\n"
                   "block-path: block sizes joined by '-', 2 = edge, k = cycle C_k, k+ = clique K_k\n"
                   "star-cut: block-path specs of the legs at center c, joined by '/'")
      ->required();

  auto* c_explore = app.add_subcommand("explore-conjecture",
                                       "Search stars of blocks centered at a block for non-hamiltonian squares");
  c_explore->add_option("--max-block", explore.max_block, "Largest center block")->check(CLI::Range(3, 8));
  c_explore->add_option("--legs", explore.legs, "Largest number of legs")->check(CLI::Range(1, 6));
  c_explore->add_option("--limit", explore.limit, "Stop after this many instances");

  auto* c_dot = app.add_subcommand("export-dot", "Graphviz output");
  c_dot->add_option("file", file, "Edge list ('-' for stdin)")->required();
  c_dot->add_flag("--square", show_square, "Also draw square-only edges (dashed)");
  c_dot->add_option("--certificate", certificate, "Highlight the certificate's cycle");

  for (auto* sub : {c_decide, c_construct, c_verify, c_classify, c_oracle, c_explore}) {
    sub->add_option("--cap", cap, "Largest graph handed to exact search (default 12, env HAMSQ_CAP)")
        ->check(CLI::Range(3, 64));
    sub->add_option("--budget", budget, "Search expansion budget")->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  EngineOptions options;
  options.cap = cap ? cap : default_cap();
  options.budget = budget;

  if (*c_generate) {
    std::cout << write_edge_list(generate(family));
    return kOk;
  }
  if (*c_explore) {
    explore.budget = budget;
    return explore_conjecture(explore, std::cout);
  }
  const LabeledGraph lg = read_graph(file);
  if (*c_analyze) return analyze(lg);
  if (*c_decide) {
    const Certificate cert =
        decide_and_construct(lg.graph, mode == "oracle" ? Mode::kOracle : Mode::kConstructive, options);
    std::cout << certificate_to_json(lg, cert);
    return decision_code(cert.decision);
  }
  if (*c_construct) return construct(lg, theorem, anchors, vertex, options);
  if (*c_verify) return verify(lg, second, options.cap);
  if (*c_classify) return classify(lg, vertex, options);
  if (*c_oracle) return oracle(lg, require_edges, forbid_edges, min_in_g, budget);
  if (*c_dot) {
    std::optional<Certificate> cert;
    if (!certificate.empty()) cert = certificate_from_json(lg, read_text(certificate));
    DotOptions dot;
    dot.square = show_square;
    dot.cycle = cert && cert->cycle ? &*cert->cycle : nullptr;
    std::cout << to_dot(lg, dot);
    return kOk;
  }
  return kUsage;
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBudgetExceeded:
    case ErrorCode::kSizeCapExceeded:
      return kLimits;
    case ErrorCode::kMalformedInput:
    case ErrorCode::kDisconnectedInput:
    case ErrorCode::kTrivialGraph:
    case ErrorCode::kInvalidGraph:
      return kMalformed;
    case ErrorCode::kBadParams:
    case ErrorCode::kBadAnchors:
    case ErrorCode::kVertexNotFound:
    case ErrorCode::kConstraintOnMissingVertex:
      return kUsage;
    case ErrorCode::kSquareNotHamiltonian:
      return kNotHam;
    case ErrorCode::kTooSmall:
    case ErrorCode::kNotTwoConnected:
    case ErrorCode::kBlockGraphNotPath:
    case ErrorCode::kPreconditionViolated:
    case ErrorCode::kWrongShape:
      return kOutOfClass;
    default:
      return kDefect;
  }
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const hamsq::Error& e) {
    std::cerr << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kDefect;
  }
}
