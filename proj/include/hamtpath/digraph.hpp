#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hamtpath/timegraph.hpp"

namespace hamtpath {

// A HAMPATH instance: a digraph over {S, T, 1..n} with designated source S
// and terminal T. Vertices are encoded as ints: S = 0, inner cities 1..n,
// T = n+1. No edge may enter S or leave T; self-loops are rejected.
// Immutable after construction; edges held sorted.
class Digraph {
 public:
  Digraph(int inner_count, std::vector<std::pair<int, int>> edges);

  int inner_count() const { return inner_count_; }
  int source() const { return 0; }
  int terminal() const { return inner_count_ + 1; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool contains(int u, int v) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  int inner_count_;
  std::vector<std::pair<int, int>> edges_;
};

// Digraph text format: '#' comments, one "d <n>" header, then "e <u> <v>"
// lines with u,v in {S, T, 1..n} (literal tokens, case-sensitive).
Digraph parse_digraph(std::string_view text);
std::string serialize_digraph(const Digraph& d);

// The HAMPATH -> HAMTPATH reduction: a time graph of order n whose source
// edges mirror (S,j), interior layers mirror the inner edges, and sink
// edges mirror (i,T). A direct (S,T) edge cannot lie on a Hamiltonian path
// and contributes nothing.
TimeGraph reduce_hampath(const Digraph& d);

// Raised when a brute-force search is asked for an instance above its cap.
class InstanceTooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Ground truth for HAMPATH: DFS over unvisited inner vertices. True iff
// there is a directed path S -> all of 1..n exactly once -> T.
bool hampath_oracle(const Digraph& d, int cap = 10);

}  // namespace hamtpath
