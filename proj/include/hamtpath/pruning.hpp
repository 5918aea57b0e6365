#pragma once

#include <cstdint>
#include <vector>

#include "hamtpath/timegraph.hpp"

namespace hamtpath {

struct PruneOptions {
  // Record one (edge, feasible?) entry per LP call. Off by default:
  // traces grow quadratically in the edge count.
  bool record_trace = false;
};

enum class PruneDecision { Hamiltonian, NotHamiltonian };

struct PruneCall {
  EdgeId edge;
  bool feasible = false;
};

struct PruneRemoval {
  EdgeId edge;
  int pass = 0;  // 1-based index of the scan that removed it
};

struct PruneReport {
  PruneDecision decision = PruneDecision::NotHamiltonian;
  TimeGraph final_graph;
  std::vector<PruneRemoval> removals;
  std::uint64_t lp_calls = 0;
  std::vector<PruneCall> trace;  // empty unless requested
};

// Iteratively removes useless edges, restarting the scan from the first
// canonical edge after every removal. Empty result means NotHamiltonian; a
// full scan with no removal means the survivor graph has no useless edge
// and the report says Hamiltonian. Deterministic; at most m+1 passes and
// m(m+1) LP calls for m input edges.
PruneReport prune(const TimeGraph& g, const PruneOptions& opts = {});

// One scan in the caller's order with no restarts. Reproduces the ordering
// pitfall: testing an edge early can leave it stranded after later removals
// invalidate it. `order` must be a permutation of g's edges.
PruneReport prune_single_pass(const TimeGraph& g,
                              const std::vector<EdgeId>& order,
                              const PruneOptions& opts = {});

}  // namespace hamtpath
