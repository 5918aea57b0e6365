#include "hamtpath/json_io.hpp"

#include <stdexcept>

namespace hamtpath {

using nlohmann::json;

json to_json(const EdgeId& e) {
  return json::array({e.from_city, e.to_city, e.layer});
}

json to_json(const TimeGraph& g) {
  json edges = json::array();
  for (const EdgeId& e : g.edges()) edges.push_back(to_json(e));
  return json{{"order", g.order()}, {"edges", std::move(edges)}};
}

json to_json(const Flow& f) {
  json entries = json::array();
  for (const auto& [e, v] : f.values()) {
    entries.push_back(json::array({to_json(e), rat_to_string(v)}));
  }
  return entries;
}

json to_json(const LPInstance& lp) {
  json columns = json::array();
  for (const EdgeId& e : lp.columns) columns.push_back(to_json(e));
  json rows = json::array();
  for (const auto& row : lp.rows) {
    json coeffs = json::object();
    for (const auto& [col, coef] : row.coeffs) {
      coeffs[std::to_string(col)] = rat_to_string(Rat(coef));
    }
    rows.push_back(json{{"coeffs", std::move(coeffs)},
                        {"rhs", rat_to_string(Rat(row.rhs))}});
  }
  return json{{"order", lp.order},
              {"columns", std::move(columns)},
              {"rows", std::move(rows)},
              {"pinned_column", lp.pinned_column}};
}

json to_json(const FeasibilityResult& r) {
  if (r.feasible) {
    return json{{"status", "feasible"}, {"point", to_json(r.point)}};
  }
  json cert = json::array();
  for (std::size_t i = 0; i < r.certificate.size(); ++i) {
    if (sgn(r.certificate[i]) != 0) {
      cert.push_back(json::array(
          {static_cast<int>(i), rat_to_string(r.certificate[i])}));
    }
  }
  return json{{"status", "infeasible"}, {"certificate", std::move(cert)}};
}

json to_json(const OracleResult& r) {
  json htps = json::array();
  for (const TimePath& p : r.htps) htps.push_back(p.cities());
  json edges = json::array();
  for (const EdgeId& e : r.edges_on_htps) edges.push_back(to_json(e));
  return json{{"htp_count", r.htp_count},
              {"htps", std::move(htps)},
              {"htps_truncated", r.htps_truncated},
              {"edges_on_htps", std::move(edges)}};
}

json to_json(const PruneReport& r) {
  json removals = json::array();
  for (const PruneRemoval& rem : r.removals) {
    removals.push_back(json{{"edge", to_json(rem.edge)}, {"pass", rem.pass}});
  }
  json final_edges = json::array();
  for (const EdgeId& e : r.final_graph.edges()) {
    final_edges.push_back(to_json(e));
  }
  json out{{"decision", r.decision == PruneDecision::Hamiltonian
                            ? "hamiltonian"
                            : "not_hamiltonian"},
           {"removals", std::move(removals)},
           {"lp_calls", r.lp_calls},
           {"final_edges", std::move(final_edges)}};
  if (!r.trace.empty()) {
    json trace = json::array();
    for (const PruneCall& call : r.trace) {
      trace.push_back(
          json{{"edge", to_json(call.edge)}, {"feasible", call.feasible}});
    }
    out["trace"] = std::move(trace);
  }
  return out;
}

namespace {

const char* kind_name(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::RandomSubgraph:
      return "random_subgraph";
    case GeneratorKind::RandomDigraphReduction:
      return "random_digraph_reduction";
    case GeneratorKind::ExhaustiveTiny:
      return "exhaustive_tiny";
  }
  return "?";
}

GeneratorKind kind_from_name(const std::string& name) {
  if (name == "random_subgraph") return GeneratorKind::RandomSubgraph;
  if (name == "random_digraph_reduction")
    return GeneratorKind::RandomDigraphReduction;
  if (name == "exhaustive_tiny") return GeneratorKind::ExhaustiveTiny;
  throw std::invalid_argument("unknown generator kind '" + name + "'");
}

}  // namespace

json to_json(const GeneratorSpec& s) {
  return json{{"kind", kind_name(s.kind)},
              {"n", s.n},
              {"p", s.p},
              {"seed", s.seed},
              {"count", s.count}};
}

GeneratorSpec generator_spec_from_json(const json& j) {
  GeneratorSpec s;
  s.kind = kind_from_name(j.at("kind").get<std::string>());
  s.n = j.at("n").get<int>();
  s.p = j.value("p", 0.5);
  s.seed = j.value("seed", std::uint64_t{0});
  s.count = j.value("count", 100);
  return s;
}

json to_json(const Discrepancy& d) {
  json out{{"kind", to_string(d.kind)},
           {"instance_index", d.instance_index},
           {"graph", to_json(d.graph)},
           {"prune_report", to_json(d.prune_report)},
           {"oracle_result", to_json(d.oracle_result)}};
  if (d.offending_edge) out["offending_edge"] = to_json(*d.offending_edge);
  return out;
}

json to_json(const CampaignReport& r) {
  json discrepancies = json::array();
  for (const Discrepancy& d : r.discrepancies) {
    discrepancies.push_back(to_json(d));
  }
  return json{{"spec", to_json(r.spec)},
              {"instances", r.instances_run},
              {"tallies",
               {{"hamiltonian", r.tallies.hamiltonian},
                {"not_hamiltonian", r.tallies.not_hamiltonian},
                {"nonviable", r.tallies.nonviable}}},
              {"discrepancies", std::move(discrepancies)},
              {"wall_time_ms", r.wall_time_ms}};
}

}  // namespace hamtpath
