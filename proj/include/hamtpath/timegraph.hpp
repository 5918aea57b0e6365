#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "hamtpath/rational.hpp"

namespace hamtpath {

// A directed edge of a time graph of order n: from city `from_city` on day
// `layer` to city `to_city` on day `layer`+1. Layer 0 leaves the source
// (city 0), layer n enters the sink (city 0); interior layers connect two
// distinct cities in 1..n.
struct EdgeId {
  int from_city = 0;
  int to_city = 0;
  int layer = 0;

  friend bool operator==(const EdgeId&, const EdgeId&) = default;
  // Canonical (layer, from, to) order; serialization and all deterministic
  // iteration use it.
  friend std::strong_ordering operator<=>(const EdgeId& a, const EdgeId& b) {
    return std::tie(a.layer, a.from_city, a.to_city) <=>
           std::tie(b.layer, b.from_city, b.to_city);
  }
};

std::string to_string(const EdgeId& e);

// True iff (i,j,t) is a legal edge of the complete time graph of order n.
// Total: never throws, false for any out-of-range triple.
bool validate_edge(int n, int i, int j, int t) noexcept;

// A time graph: order n plus an edge subset of the complete time graph.
// Immutable after construction; edges are held sorted in canonical order.
class TimeGraph {
 public:
  TimeGraph(int order, std::vector<EdgeId> edges);

  int order() const { return order_; }
  const std::vector<EdgeId>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  bool contains(const EdgeId& e) const;

  // Copy of this graph with one edge removed. Throws if absent.
  TimeGraph without(const EdgeId& e) const;

  friend bool operator==(const TimeGraph&, const TimeGraph&) = default;

 private:
  int order_;
  std::vector<EdgeId> edges_;
};

// K_n^T: all n(n-1)^2 + 2n legal edges. Throws std::invalid_argument for
// n < 1.
TimeGraph complete_time_graph(int n);

// The day-by-day city sequence p(1..n) of a time path. Entries lie in 1..n
// and adjacent entries differ; the path is Hamiltonian iff the sequence is
// a permutation.
class TimePath {
 public:
  explicit TimePath(std::vector<int> cities);

  const std::vector<int>& cities() const { return cities_; }
  int length() const { return static_cast<int>(cities_.size()); }
  bool is_hamiltonian() const;

  // The n+1 edges the path uses, layer 0 through layer n.
  std::vector<EdgeId> induced_edges() const;

  friend bool operator==(const TimePath&, const TimePath&) = default;

 private:
  std::vector<int> cities_;
};

// A rational-valued function on the edges of a time graph of a fixed order.
class Flow {
 public:
  explicit Flow(int order);

  int order() const { return order_; }
  const std::map<EdgeId, Rat>& values() const { return values_; }

  // Zero for edges outside the support.
  Rat value(const EdgeId& e) const;

  // Throws if (i,j,t) is not a legal edge for this order. Setting zero
  // erases the entry, keeping the support minimal.
  void set(const EdgeId& e, Rat v);

  // Sum over all edges with the given layer. Throws std::out_of_range
  // unless 0 <= t <= order.
  Rat layer_sum(int t) const;

  friend bool operator==(const Flow&, const Flow&) = default;

 private:
  int order_;
  std::map<EdgeId, Rat> values_;
};

// Characteristic flow of a path: 1 on the n+1 induced edges, 0 elsewhere.
// Throws std::invalid_argument naming the first induced edge missing from g.
Flow path_to_flow(const TimeGraph& g, const TimePath& p);

// Raised by the text-format parsers; `line` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

// Time-graph text format: optional '#' comment lines, one "n <order>"
// header, then "e <i> <j> <t>" lines. Serialization is canonical: header
// first, edges in (t,i,j) order, one trailing newline per line.
TimeGraph parse_timegraph(std::string_view text);
std::string serialize_timegraph(const TimeGraph& g);

}  // namespace hamtpath
