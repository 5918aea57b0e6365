#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hamtpath/fixtures.hpp"
#include "hamtpath/json_io.hpp"
#include "hamtpath/lp.hpp"
#include "hamtpath/oracle.hpp"
#include "hamtpath/pruning.hpp"
#include "hamtpath/search.hpp"

namespace py = pybind11;

namespace {

using namespace hamtpath;

EdgeId edge_from_tuple(const py::tuple& t) {
  if (t.size() != 3) {
    throw py::value_error("edge must be a (from_city, to_city, layer) tuple");
  }
  return EdgeId{t[0].cast<int>(), t[1].cast<int>(), t[2].cast<int>()};
}

py::tuple edge_to_tuple(const EdgeId& e) {
  return py::make_tuple(e.from_city, e.to_city, e.layer);
}

py::list edges_to_list(const std::vector<EdgeId>& edges) {
  py::list out;
  for (const EdgeId& e : edges) out.append(edge_to_tuple(e));
  return out;
}

// Reports cross the boundary as plain dicts/lists, reusing the JSON
// encodings documented in the README.
py::object json_to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

GeneratorKind kind_from_string(const std::string& kind) {
  if (kind == "random_subgraph") return GeneratorKind::RandomSubgraph;
  if (kind == "random_digraph_reduction")
    return GeneratorKind::RandomDigraphReduction;
  if (kind == "exhaustive_tiny") return GeneratorKind::ExhaustiveTiny;
  throw py::value_error("unknown generator kind '" + kind + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Time graphs, exact LP feasibility, useless-edge pruning and "
            "conjecture search";

  py::register_exception<ParseError>(m, "FormatError", PyExc_ValueError);
  py::register_exception<InstanceTooLarge>(m, "InstanceTooLarge",
                                           PyExc_ValueError);
  py::register_exception<CertificateError>(m, "CertificateError",
                                           PyExc_RuntimeError);
  py::register_exception<StaleDiscrepancy>(m, "StaleDiscrepancy",
                                           PyExc_ValueError);

  py::class_<TimeGraph>(m, "TimeGraph")
      .def(py::init([](int order, const std::vector<py::tuple>& edges) {
             std::vector<EdgeId> parsed;
             parsed.reserve(edges.size());
             for (const auto& t : edges) parsed.push_back(edge_from_tuple(t));
             return TimeGraph(order, std::move(parsed));
           }),
           py::arg("order"), py::arg("edges"))
      .def_property_readonly("order", &TimeGraph::order)
      .def("edges", [](const TimeGraph& g) { return edges_to_list(g.edges()); })
      .def("edge_count", &TimeGraph::edge_count)
      .def("contains",
           [](const TimeGraph& g, const py::tuple& e) {
             return g.contains(edge_from_tuple(e));
           })
      .def("without",
           [](const TimeGraph& g, const py::tuple& e) {
             return g.without(edge_from_tuple(e));
           })
      .def("to_text", [](const TimeGraph& g) { return serialize_timegraph(g); })
      .def_static("from_text",
                  [](const std::string& text) { return parse_timegraph(text); })
      .def_static("complete", &complete_time_graph, py::arg("n"))
      .def(py::self == py::self)
      .def("__repr__", [](const TimeGraph& g) {
        return "TimeGraph(order=" + std::to_string(g.order()) + ", edges=" +
               std::to_string(g.edge_count()) + ")";
      });

  py::class_<Digraph>(m, "Digraph")
      .def_property_readonly("inner_count", &Digraph::inner_count)
      .def("to_text", [](const Digraph& d) { return serialize_digraph(d); })
      .def_static("from_text",
                  [](const std::string& text) { return parse_digraph(text); })
      .def(py::self == py::self);

  m.def("validate_edge", &validate_edge, py::arg("n"), py::arg("i"),
        py::arg("j"), py::arg("t"));
  m.def("fixture_graph", &fixture_graph, py::arg("name"));
  m.def("fixture_names", &fixture_names);
  m.def("random_subgraph", &random_subgraph, py::arg("n"), py::arg("p"),
        py::arg("seed"));
  m.def("random_digraph", &random_digraph, py::arg("n"), py::arg("p"),
        py::arg("seed"));
  m.def("reduce_hampath", &reduce_hampath, py::arg("digraph"));
  m.def("hampath_oracle", &hampath_oracle, py::arg("digraph"),
        py::arg("cap") = 10);

  m.def(
      "enumerate_htps",
      [](const TimeGraph& g, int order_cap, std::size_t htp_list_cap) {
        OracleOptions opts{order_cap, htp_list_cap};
        return json_to_py(to_json(enumerate_htps(g, opts)));
      },
      py::arg("g"), py::arg("order_cap") = 8, py::arg("htp_list_cap") = 1000);
  m.def(
      "is_hamiltonian",
      [](const TimeGraph& g, int order_cap) {
        OracleOptions opts;
        opts.order_cap = order_cap;
        return is_hamiltonian(g, opts);
      },
      py::arg("g"), py::arg("order_cap") = 8);

  m.def(
      "is_useless",
      [](const TimeGraph& g, const py::tuple& e) {
        return is_useless(g, edge_from_tuple(e));
      },
      py::arg("g"), py::arg("edge"));
  m.def(
      "solve_lp",
      [](const TimeGraph& g, const py::tuple& e, bool dump_lp) {
        const EdgeId edge = edge_from_tuple(e);
        const LPInstance lp = build_lp(g, edge);
        const FeasibilityResult result = solve_feasibility(lp);
        nlohmann::json out = to_json(result);
        out["verified"] = verify_certificate(lp, result);
        if (dump_lp) out["lp"] = to_json(lp);
        return json_to_py(out);
      },
      py::arg("g"), py::arg("edge"), py::arg("dump_lp") = false);

  m.def(
      "prune",
      [](const TimeGraph& g, bool record_trace) {
        return json_to_py(to_json(prune(g, {record_trace})));
      },
      py::arg("g"), py::arg("record_trace") = false);
  m.def(
      "prune_single_pass",
      [](const TimeGraph& g, const std::vector<py::tuple>& order,
         bool record_trace) {
        std::vector<EdgeId> edges;
        edges.reserve(order.size());
        for (const auto& t : order) edges.push_back(edge_from_tuple(t));
        return json_to_py(to_json(prune_single_pass(g, edges, {record_trace})));
      },
      py::arg("g"), py::arg("order"), py::arg("record_trace") = false);

  m.def(
      "run_campaign",
      [](const std::string& kind, int n, double p, std::uint64_t seed,
         int count, int threads, int oracle_cap) {
        GeneratorSpec spec{kind_from_string(kind), n, p, seed, count};
        CampaignOptions opts;
        opts.threads = threads;
        opts.oracle.order_cap = oracle_cap;
        return json_to_py(to_json(run_campaign(spec, opts)));
      },
      py::arg("kind"), py::arg("n"), py::arg("p") = 0.5, py::arg("seed") = 0,
      py::arg("count") = 100, py::arg("threads") = 1, py::arg("oracle_cap") = 8);
  m.def(
      "classify_graph",
      [](const TimeGraph& g) {
        py::list out;
        for (const Discrepancy& d : classify_graph(g)) {
          out.append(json_to_py(to_json(d)));
        }
        return out;
      },
      py::arg("g"));
}
