#include <json.hpp>

#include "hamsq/error.hpp"
#include "hamsq/io.hpp"

namespace hamsq {

using json = nlohmann::ordered_json;

namespace {

json vertex_json(const LabeledGraph& g, Vertex v) {
  if (v.id < g.labels.size()) return g.label(v);
  return v.id;
}

Vertex vertex_from(const LabeledGraph& g, const json& j) {
  if (j.is_number_unsigned()) return Vertex{j.get<std::uint32_t>()};
  if (!j.is_string()) throw Error(ErrorCode::kMalformedInput, "vertex must be a label or an id");
  auto v = g.find(j.get<std::string>());
  if (!v) throw Error(ErrorCode::kMalformedInput, "unknown vertex label '" + j.get<std::string>() + "'");
  return *v;
}

Decision decision_from(const std::string& s) {
  for (Decision d : {Decision::kHamiltonian, Decision::kNotHamiltonian, Decision::kOutOfClass}) {
    if (to_string(d) == s) return d;
  }
  throw Error(ErrorCode::kMalformedInput, "unknown decision '" + s + "'");
}

Evidence evidence_from(const std::string& s) {
  for (Evidence e : {Evidence::kNone, Evidence::kHighTVertex, Evidence::kTooSmall, Evidence::kExhaustiveSearch}) {
    if (to_string(e) == s) return e;
  }
  throw Error(ErrorCode::kMalformedInput, "unknown evidence '" + s + "'");
}

}  // namespace

std::string certificate_to_json(const LabeledGraph& g, const Certificate& cert) {
  json j;
  j["decision"] = to_string(cert.decision);
  j["evidence"] = to_string(cert.evidence);
  json cycle = json::array();
  json prov = json::array();
  if (cert.cycle) {
    for (Vertex v : cert.cycle->order()) cycle.push_back(vertex_json(g, v));
    for (Provenance p : cert.cycle->provenance()) prov.push_back(p == Provenance::kInG ? "G" : "SQ");
  }
  j["cycle"] = cycle;
  j["edge_provenance"] = prov;
  j["witness"] = cert.witness_vertex ? vertex_json(g, *cert.witness_vertex) : json(nullptr);
  json trace = json::array();
  for (const TraceStep& s : cert.trace) {
    trace.push_back({{"theorem_case", s.theorem_case},
                     {"merged_vertex", vertex_json(g, s.merged_vertex)},
                     {"subgraph_sizes", s.subgraph_sizes}});
  }
  j["trace"] = trace;
  json violations = json::array();
  if (!cert.preconditions.in_class) {
    json w = json::array();
    for (Vertex v : cert.preconditions.witness) w.push_back(vertex_json(g, v));
    violations.push_back({{"condition", cert.preconditions.violated_condition},
                          {"reason", cert.preconditions.reason},
                          {"witness", w}});
  }
  j["preconditions"] = {{"in_class", cert.preconditions.in_class}, {"violations", violations}};
  return j.dump(2) + "\n";
}

Certificate certificate_from_json(const LabeledGraph& g, std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kMalformedInput, std::string("certificate is not valid JSON: ") + e.what());
  }
  try {
    Certificate cert;
    cert.decision = decision_from(j.at("decision").get<std::string>());
    if (j.contains("evidence")) cert.evidence = evidence_from(j.at("evidence").get<std::string>());
    const json& cycle = j.at("cycle");
    const json& prov = j.at("edge_provenance");
    if (cycle.size() != prov.size()) throw Error(ErrorCode::kMalformedInput, "cycle and edge_provenance lengths differ");
    if (!cycle.empty()) {
      std::vector<Vertex> order;
      std::vector<Provenance> flags;
      for (const json& v : cycle) order.push_back(vertex_from(g, v));
      for (const json& p : prov) {
        const std::string s = p.get<std::string>();
        if (s != "G" && s != "SQ") throw Error(ErrorCode::kMalformedInput, "edge_provenance entries are \"G\" or \"SQ\"");
        flags.push_back(s == "G" ? Provenance::kInG : Provenance::kInSquareOnly);
      }
      cert.cycle = HamCycle::from_parts(std::move(order), std::move(flags));
    }
    if (j.contains("witness") && !j.at("witness").is_null()) cert.witness_vertex = vertex_from(g, j.at("witness"));
    if (j.contains("trace")) {
      for (const json& s : j.at("trace")) {
        cert.trace.push_back(TraceStep{s.at("theorem_case").get<std::string>(), vertex_from(g, s.at("merged_vertex")),
                                       s.at("subgraph_sizes").get<std::vector<std::size_t>>()});
      }
    }
    const json& pre = j.at("preconditions");
    cert.preconditions.in_class = pre.at("in_class").get<bool>();
    for (const json& v : pre.at("violations")) {
      cert.preconditions.violated_condition = v.at("condition").get<int>();
      cert.preconditions.reason = v.at("reason").get<std::string>();
      for (const json& w : v.at("witness")) cert.preconditions.witness.push_back(vertex_from(g, w));
    }
    return cert;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kMalformedInput, std::string("certificate has the wrong shape: ") + e.what());
  }
}

}  // namespace hamsq
