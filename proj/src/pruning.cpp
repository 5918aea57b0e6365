#include "hamtpath/pruning.hpp"

#include <algorithm>

#include "hamtpath/lp.hpp"

namespace hamtpath {

PruneReport prune(const TimeGraph& g, const PruneOptions& opts) {
  PruneReport report{.decision = PruneDecision::NotHamiltonian,
                     .final_graph = g};
  TimeGraph current = g;
  int pass = 0;
  bool removed = true;
  while (removed) {
    ++pass;
    removed = false;
    if (current.empty()) {
      report.decision = PruneDecision::NotHamiltonian;
      report.final_graph = current;
      return report;
    }
    for (const EdgeId e : current.edges()) {  // by value: removal below
      ++report.lp_calls;                      // invalidates the iteration
      const bool feasible = decide_lp(current, e).feasible;
      if (opts.record_trace) report.trace.push_back({e, feasible});
      if (!feasible) {
        current = current.without(e);
        report.removals.push_back({e, pass});
        removed = true;
        break;  // restart the scan on the shrunken graph
      }
    }
  }
  // A full pass made no removal, so no surviving edge is useless.
  report.decision = PruneDecision::Hamiltonian;
  report.final_graph = current;
  return report;
}

PruneReport prune_single_pass(const TimeGraph& g,
                              const std::vector<EdgeId>& order,
                              const PruneOptions& opts) {
  std::vector<EdgeId> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != g.edges()) {
    throw std::invalid_argument(
        "order is not a permutation of the graph's edges");
  }
  PruneReport report{.decision = PruneDecision::NotHamiltonian,
                     .final_graph = g};
  TimeGraph current = g;
  for (const EdgeId& e : order) {
    ++report.lp_calls;
    const bool feasible = decide_lp(current, e).feasible;
    if (opts.record_trace) report.trace.push_back({e, feasible});
    if (!feasible) {
      current = current.without(e);
      report.removals.push_back({e, 1});
    }
  }
  report.decision = current.empty() ? PruneDecision::NotHamiltonian
                                    : PruneDecision::Hamiltonian;
  report.final_graph = current;
  return report;
}

}  // namespace hamtpath
