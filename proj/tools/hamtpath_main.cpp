#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "hamtpath/fixtures.hpp"
#include "hamtpath/json_io.hpp"
#include "hamtpath/lp.hpp"
#include "hamtpath/oracle.hpp"
#include "hamtpath/pruning.hpp"
#include "hamtpath/rng.hpp"
#include "hamtpath/search.hpp"

namespace {

using hamtpath::EdgeId;
using hamtpath::TimeGraph;
using nlohmann::json;

// Exit codes: 0 decision "yes"/success, 1 decision "no", 2 usage or input
// error, 3 internal invariant violation.
constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct GlobalFlags {
  bool pretty = false;
  bool trace = false;
  int cap = 8;
  std::string out_dir;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const json& j, const GlobalFlags& flags) {
  std::cout << (flags.pretty ? j.dump(2) : j.dump()) << "\n";
}

// Order files for prune --single-pass: '#' comments and "e <i> <j> <t>"
// lines, no header.
std::vector<EdgeId> parse_edge_list(const std::string& text) {
  std::istringstream input(text);
  std::string line;
  int line_no = 0;
  std::vector<EdgeId> edges;
  while (std::getline(input, line)) {
    ++line_no;
    std::istringstream is(line);
    std::string tag;
    if (!(is >> tag) || tag[0] == '#') continue;
    int i, j, t;
    if (tag != "e" || !(is >> i >> j >> t)) {
      throw hamtpath::ParseError(line_no, "expected 'e <i> <j> <t>'");
    }
    std::string extra;
    if (is >> extra) {
      throw hamtpath::ParseError(line_no, "trailing token '" + extra + "'");
    }
    edges.push_back({i, j, t});
  }
  return edges;
}

void write_findings(const hamtpath::CampaignReport& report,
                    const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  int idx = 0;
  for (const auto& d : report.discrepancies) {
    const std::string stem =
        "discrepancy_" + std::to_string(idx++) + "_" + to_string(d.kind);
    std::ofstream graph_file(fs::path(out_dir) / (stem + ".tg"));
    graph_file << hamtpath::serialize_timegraph(d.graph);
    std::ofstream evidence(fs::path(out_dir) / (stem + ".json"));
    evidence << to_json(d).dump(2) << "\n";
  }
}

int cmd_gen(const std::string& kind, int n, double p, std::uint64_t seed,
            const std::string& fixture, const GlobalFlags&) {
  TimeGraph g = [&] {
    if (kind == "complete") return hamtpath::complete_time_graph(n);
    if (kind == "random") return hamtpath::random_subgraph(n, p, seed);
    return hamtpath::fixture_graph(fixture);
  }();
  std::cout << hamtpath::serialize_timegraph(g);
  return kExitYes;
}

int cmd_reduce(const std::string& file, const GlobalFlags&) {
  const auto d = hamtpath::parse_digraph(read_input(file));
  std::cout << hamtpath::serialize_timegraph(hamtpath::reduce_hampath(d));
  return kExitYes;
}

int cmd_oracle(const std::string& file, const GlobalFlags& flags) {
  const auto g = hamtpath::parse_timegraph(read_input(file));
  hamtpath::OracleOptions opts;
  opts.order_cap = flags.cap;
  const auto result = hamtpath::enumerate_htps(g, opts);
  emit(to_json(result), flags);
  std::cerr << (result.is_hamiltonian() ? "hamiltonian" : "not hamiltonian")
            << ": " << result.htp_count << " htp(s)\n";
  return result.is_hamiltonian() ? kExitYes : kExitNo;
}

int cmd_prune(const std::string& file, bool single_pass,
              const std::string& order_file, const GlobalFlags& flags) {
  const auto g = hamtpath::parse_timegraph(read_input(file));
  hamtpath::PruneOptions opts;
  opts.record_trace = flags.trace;
  hamtpath::PruneReport report = [&] {
    if (!single_pass) return hamtpath::prune(g, opts);
    std::vector<EdgeId> order = order_file.empty()
                                    ? g.edges()
                                    : parse_edge_list(read_input(order_file));
    return hamtpath::prune_single_pass(g, order, opts);
  }();
  emit(to_json(report), flags);
  const bool hamiltonian =
      report.decision == hamtpath::PruneDecision::Hamiltonian;
  std::cerr << (hamiltonian ? "hamiltonian" : "not hamiltonian") << ": removed "
            << report.removals.size() << " of " << g.edge_count()
            << " edge(s), " << report.lp_calls << " LP call(s)\n";
  return hamiltonian ? kExitYes : kExitNo;
}

int cmd_lp(const std::string& file, int i, int j, int t, bool dump_lp,
           const GlobalFlags& flags) {
  const auto g = hamtpath::parse_timegraph(read_input(file));
  const EdgeId e{i, j, t};
  const auto lp = hamtpath::build_lp(g, e);
  const auto result = hamtpath::solve_feasibility(lp);
  const bool verified = hamtpath::verify_certificate(lp, result);
  json out = to_json(result);
  out["edge"] = to_json(e);
  out["verified"] = verified;
  if (dump_lp) out["lp"] = to_json(lp);
  emit(out, flags);
  if (!verified) {
    std::cerr << "certificate failed verification\n";
    return kExitInternal;
  }
  std::cerr << (result.feasible ? "feasible" : "infeasible") << "\n";
  return result.feasible ? kExitYes : kExitNo;
}

int cmd_search(const hamtpath::GeneratorSpec& spec, int threads,
               const GlobalFlags& flags) {
  hamtpath::CampaignOptions opts;
  opts.threads = threads;
  opts.oracle.order_cap = flags.cap;
  const auto report = hamtpath::run_campaign(spec, opts);
  emit(to_json(report), flags);
  if (!flags.out_dir.empty() && !report.discrepancies.empty()) {
    write_findings(report, flags.out_dir);
  }
  std::cerr << report.instances_run << " instance(s): "
            << report.tallies.hamiltonian << " hamiltonian, "
            << report.tallies.not_hamiltonian << " not ("
            << report.tallies.nonviable << " nonviable), "
            << report.discrepancies.size() << " discrepancy(ies)\n";
  return report.has_bug() ? kExitInternal : kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Time-graph toolkit: generation, HAMPATH reduction, exact LP "
               "feasibility, useless-edge pruning and conjecture search"};
  app.require_subcommand(1);

  GlobalFlags flags;
  app.add_flag("--json-pretty", flags.pretty, "indent JSON output");
  app.add_flag("--trace", flags.trace, "record per-LP-call traces");
  app.add_option("--cap", flags.cap, "brute-force oracle order cap")
      ->capture_default_str();
  app.add_option("--out-dir", flags.out_dir,
                 "directory for discrepancy findings (search)");

  // gen
  auto* gen = app.add_subcommand("gen", "emit a time-graph file");
  gen->require_subcommand(1);
  int gen_n = 1;
  double gen_p = 0.5;
  std::uint64_t gen_seed = 0;
  std::string gen_fixture;
  auto* gen_complete = gen->add_subcommand("complete", "the complete graph");
  gen_complete->add_option("n", gen_n, "order")->required();
  auto* gen_random = gen->add_subcommand("random", "random edge subset");
  gen_random->add_option("n", gen_n, "order")->required();
  gen_random->add_option("p", gen_p, "edge keep probability")->required();
  gen_random->add_option("--seed", gen_seed, "64-bit seed");
  auto* gen_fixture_cmd = gen->add_subcommand("fixture", "a built-in graph");
  gen_fixture_cmd->add_option("name", gen_fixture, "fixture name")->required();

  // reduce
  auto* reduce = app.add_subcommand("reduce", "digraph file -> time-graph file");
  std::string reduce_file;
  reduce->add_option("file", reduce_file, "digraph file or '-'")->required();

  // oracle
  auto* oracle = app.add_subcommand("oracle", "brute-force htp enumeration");
  std::string oracle_file;
  oracle->add_option("file", oracle_file, "time-graph file or '-'")->required();

  // prune
  auto* prune = app.add_subcommand("prune", "useless-edge pruning");
  std::string prune_file;
  bool single_pass = false;
  std::string order_file;
  prune->add_option("file", prune_file, "time-graph file or '-'")->required();
  prune->add_flag("--single-pass", single_pass,
                  "one scan without restarts (canonical order by default)");
  prune->add_option("--order", order_file,
                    "edge-list file giving the single-pass scan order");

  // lp
  auto* lp = app.add_subcommand("lp", "feasibility of one pinned edge");
  std::string lp_file;
  int lp_i = 0, lp_j = 0, lp_t = 0;
  bool dump_lp = false;
  lp->add_option("file", lp_file, "time-graph file or '-'")->required();
  lp->add_option("i", lp_i, "edge from-city")->required();
  lp->add_option("j", lp_j, "edge to-city")->required();
  lp->add_option("t", lp_t, "edge layer")->required();
  lp->add_flag("--dump-lp", dump_lp, "include the LP system in the output");

  // search
  auto* search = app.add_subcommand("search", "conjecture search campaign");
  std::string spec_file;
  std::string search_kind = "random_subgraph";
  int search_n = 3;
  double search_p = 0.5;
  std::uint64_t search_seed = 0;
  int search_count = 100;
  int search_threads = 1;
  search->add_option("--spec", spec_file, "JSON campaign spec file");
  search->add_option("--kind", search_kind,
                     "random_subgraph | random_digraph_reduction | "
                     "exhaustive_tiny")
      ->capture_default_str();
  search->add_option("--n", search_n, "graph order")->capture_default_str();
  search->add_option("--p", search_p, "edge probability")
      ->capture_default_str();
  search->add_option("--seed", search_seed, "64-bit campaign seed");
  search->add_option("--count", search_count, "instances to generate")
      ->capture_default_str();
  search->add_option("--threads", search_threads, "parallel workers")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitYes : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      const std::string kind = gen_complete->parsed()  ? "complete"
                               : gen_random->parsed() ? "random"
                                                      : "fixture";
      return cmd_gen(kind, gen_n, gen_p, gen_seed, gen_fixture, flags);
    }
    if (reduce->parsed()) return cmd_reduce(reduce_file, flags);
    if (oracle->parsed()) return cmd_oracle(oracle_file, flags);
    if (prune->parsed()) {
      return cmd_prune(prune_file, single_pass, order_file, flags);
    }
    if (lp->parsed()) return cmd_lp(lp_file, lp_i, lp_j, lp_t, dump_lp, flags);
    if (search->parsed()) {
      hamtpath::GeneratorSpec spec;
      if (!spec_file.empty()) {
        spec = hamtpath::generator_spec_from_json(
            json::parse(read_input(spec_file)));
      } else {
        spec.kind = [&] {
          if (search_kind == "random_subgraph")
            return hamtpath::GeneratorKind::RandomSubgraph;
          if (search_kind == "random_digraph_reduction")
            return hamtpath::GeneratorKind::RandomDigraphReduction;
          if (search_kind == "exhaustive_tiny")
            return hamtpath::GeneratorKind::ExhaustiveTiny;
          throw std::invalid_argument("unknown --kind '" + search_kind + "'");
        }();
        spec.n = search_n;
        spec.p = search_p;
        spec.seed = search_seed;
        spec.count = search_count;
      }
      return cmd_search(spec, search_threads, flags);
    }
  } catch (const hamtpath::CertificateError& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return kExitInternal;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
