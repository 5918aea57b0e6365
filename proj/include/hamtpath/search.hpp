#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hamtpath/digraph.hpp"
#include "hamtpath/oracle.hpp"
#include "hamtpath/pruning.hpp"
#include "hamtpath/timegraph.hpp"

namespace hamtpath {

enum class GeneratorKind {
  // Each edge of K_n^T kept independently with probability p.
  RandomSubgraph,
  // A random digraph (each legal S/inner/T edge with probability p) pushed
  // through reduce_hampath.
  RandomDigraphReduction,
  // Every edge subset of K_n^T; n <= 2 only (64 subsets at n = 2).
  ExhaustiveTiny,
};

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::RandomSubgraph;
  int n = 3;
  double p = 0.5;
  std::uint64_t seed = 0;
  int count = 100;  // ignored by ExhaustiveTiny
};

enum class DiscrepancyKind {
  // prune says Hamiltonian, the oracle finds no htp: refutes Conjecture 4.1.
  ConjectureCounterexample,
  // prune says NotHamiltonian, the oracle finds a htp: implementation bug.
  SoundnessBug,
  // an edge on an oracle-found htp was classified useless: LP-layer bug.
  UselessEdgeBug,
};

const char* to_string(DiscrepancyKind k);

struct Discrepancy {
  DiscrepancyKind kind;
  TimeGraph graph;
  PruneReport prune_report;
  OracleResult oracle_result;
  std::optional<EdgeId> offending_edge;  // UselessEdgeBug only
  int instance_index = -1;
};

struct DecisionTallies {
  int hamiltonian = 0;
  int not_hamiltonian = 0;
  int nonviable = 0;  // no source or no sink edge; always NotHamiltonian
};

struct CampaignReport {
  GeneratorSpec spec;
  int instances_run = 0;
  DecisionTallies tallies;
  std::vector<Discrepancy> discrepancies;
  double wall_time_ms = 0.0;

  bool has_bug() const;
};

struct CampaignOptions {
  int threads = 1;
  OracleOptions oracle;
};

// Generators, exposed for reuse and for replaying single instances.
TimeGraph random_subgraph(int n, double p, std::uint64_t seed);
Digraph random_digraph(int n, double p, std::uint64_t seed);

// Runs prune and the oracle on every generated instance, compares the
// decisions, and cross-checks every removed edge against the oracle's
// edges_on_htps. Deterministic given the spec, whatever the thread count:
// instance i always draws from instance_seed(spec.seed, i) and results
// merge in instance order.
CampaignReport run_campaign(const GeneratorSpec& spec,
                            const CampaignOptions& opts = {});

// Classifies one graph the way the campaign does.
std::vector<Discrepancy> classify_graph(const TimeGraph& g,
                                        const OracleOptions& oracle = {});

class StaleDiscrepancy : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Greedy 1-minimization: repeatedly drop any single edge whose removal
// preserves the discrepancy kind. Throws StaleDiscrepancy if the input
// does not reproduce. The result carries freshly recomputed evidence.
Discrepancy minimize_discrepancy(const Discrepancy& d,
                                 const OracleOptions& oracle = {});

// Core of the minimizer, parameterized by an arbitrary "still interesting"
// predicate so it can be exercised independently of the deciders.
TimeGraph minimize_graph(const TimeGraph& g,
                         const std::function<bool(const TimeGraph&)>& keep);

}  // namespace hamtpath
