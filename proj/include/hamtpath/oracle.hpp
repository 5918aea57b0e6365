#pragma once

#include <cstdint>
#include <vector>

#include "hamtpath/digraph.hpp"
#include "hamtpath/timegraph.hpp"

namespace hamtpath {

struct OracleOptions {
  // Largest graph order the brute-force search will accept.
  int order_cap = 8;
  // htp_count stays exact past this; only the listed paths are capped.
  std::size_t htp_list_cap = 1000;
};

struct OracleResult {
  std::uint64_t htp_count = 0;
  std::vector<TimePath> htps;        // at most htp_list_cap entries
  bool htps_truncated = false;
  std::vector<EdgeId> edges_on_htps; // canonical order

  bool is_hamiltonian() const { return htp_count > 0; }
};

// Exhaustive enumeration of Hamiltonian time paths by DFS over unvisited
// cities, layer by layer. Counts exactly and records every edge that lies
// on at least one htp. Throws InstanceTooLarge past the order cap.
OracleResult enumerate_htps(const TimeGraph& g, const OracleOptions& opts = {});

bool is_hamiltonian(const TimeGraph& g, const OracleOptions& opts = {});

}  // namespace hamtpath
