#include "hamtpath/timegraph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace hamtpath {

std::string to_string(const EdgeId& e) {
  std::ostringstream os;
  os << "e(" << e.from_city << "," << e.to_city << "," << e.layer << ")";
  return os.str();
}

bool validate_edge(int n, int i, int j, int t) noexcept {
  if (n < 1) return false;
  if (t == 0) return i == 0 && 1 <= j && j <= n;
  if (t == n) return j == 0 && 1 <= i && i <= n;
  if (1 <= t && t <= n - 1)
    return 1 <= i && i <= n && 1 <= j && j <= n && i != j;
  return false;
}

TimeGraph::TimeGraph(int order, std::vector<EdgeId> edges)
    : order_(order), edges_(std::move(edges)) {
  if (order_ < 1) {
    throw std::invalid_argument("time graph order must be >= 1, got " +
                                std::to_string(order_));
  }
  for (const EdgeId& e : edges_) {
    if (!validate_edge(order_, e.from_city, e.to_city, e.layer)) {
      throw std::invalid_argument("illegal edge " + to_string(e) +
                                  " for order " + std::to_string(order_));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw std::invalid_argument("duplicate edge " + to_string(*dup));
  }
}

bool TimeGraph::contains(const EdgeId& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

TimeGraph TimeGraph::without(const EdgeId& e) const {
  if (!contains(e)) {
    throw std::invalid_argument("edge " + to_string(e) + " not in graph");
  }
  std::vector<EdgeId> rest;
  rest.reserve(edges_.size() - 1);
  for (const EdgeId& x : edges_) {
    if (x != e) rest.push_back(x);
  }
  return TimeGraph(order_, std::move(rest));
}

TimeGraph complete_time_graph(int n) {
  if (n < 1) {
    throw std::invalid_argument("invalid order " + std::to_string(n) +
                                " for complete time graph");
  }
  std::vector<EdgeId> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) * (n - 1) + 2 * n);
  for (int j = 1; j <= n; ++j) edges.push_back({0, j, 0});
  for (int t = 1; t <= n - 1; ++t) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i != j) edges.push_back({i, j, t});
      }
    }
  }
  for (int i = 1; i <= n; ++i) edges.push_back({i, 0, n});
  return TimeGraph(n, std::move(edges));
}

TimePath::TimePath(std::vector<int> cities) : cities_(std::move(cities)) {
  const int n = static_cast<int>(cities_.size());
  if (n < 1) throw std::invalid_argument("time path must visit at least one city");
  for (int t = 0; t < n; ++t) {
    if (cities_[t] < 1 || cities_[t] > n) {
      throw std::invalid_argument("city " + std::to_string(cities_[t]) +
                                  " out of range 1.." + std::to_string(n));
    }
    if (t + 1 < n && cities_[t] == cities_[t + 1]) {
      throw std::invalid_argument("time path repeats city " +
                                  std::to_string(cities_[t]) + " on days " +
                                  std::to_string(t + 1) + "," +
                                  std::to_string(t + 2));
    }
  }
}

bool TimePath::is_hamiltonian() const {
  std::vector<bool> seen(cities_.size() + 1, false);
  for (int c : cities_) {
    if (seen[c]) return false;
    seen[c] = true;
  }
  return true;
}

std::vector<EdgeId> TimePath::induced_edges() const {
  const int n = length();
  std::vector<EdgeId> out;
  out.reserve(n + 1);
  out.push_back({0, cities_[0], 0});
  for (int t = 1; t <= n - 1; ++t) {
    out.push_back({cities_[t - 1], cities_[t], t});
  }
  out.push_back({cities_[n - 1], 0, n});
  return out;
}

Flow::Flow(int order) : order_(order) {
  if (order_ < 1) {
    throw std::invalid_argument("flow order must be >= 1, got " +
                                std::to_string(order_));
  }
}

Rat Flow::value(const EdgeId& e) const {
  auto it = values_.find(e);
  return it == values_.end() ? Rat(0) : it->second;
}

void Flow::set(const EdgeId& e, Rat v) {
  if (!validate_edge(order_, e.from_city, e.to_city, e.layer)) {
    throw std::invalid_argument("illegal edge " + to_string(e) +
                                " for order " + std::to_string(order_));
  }
  v.canonicalize();  // mpq_class(2,4) arrives unreduced
  if (v == 0) {
    values_.erase(e);
  } else {
    values_[e] = std::move(v);
  }
}

Rat Flow::layer_sum(int t) const {
  if (t < 0 || t > order_) {
    throw std::out_of_range("layer " + std::to_string(t) +
                            " out of range 0.." + std::to_string(order_));
  }
  Rat sum(0);
  for (const auto& [e, v] : values_) {
    if (e.layer == t) sum += v;
  }
  return sum;
}

Flow path_to_flow(const TimeGraph& g, const TimePath& p) {
  if (p.length() != g.order()) {
    throw std::invalid_argument("path length " + std::to_string(p.length()) +
                                " does not match graph order " +
                                std::to_string(g.order()));
  }
  Flow f(g.order());
  for (const EdgeId& e : p.induced_edges()) {
    if (!g.contains(e)) {
      throw std::invalid_argument("path not in graph: missing edge " +
                                  to_string(e));
    }
    f.set(e, Rat(1));
  }
  return f;
}

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

namespace {

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) tokens.push_back(tok);
  return tokens;
}

int parse_int(const std::string& tok, int line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line_no, "expected integer, got '" + tok + "'");
  }
  return value;
}

bool is_blank_or_comment(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

}  // namespace

TimeGraph parse_timegraph(std::string_view text) {
  std::istringstream input{std::string(text)};
  std::string line;
  int line_no = 0;
  int order = -1;
  std::vector<EdgeId> edges;
  while (std::getline(input, line)) {
    ++line_no;
    if (is_blank_or_comment(line)) continue;
    auto tokens = split_tokens(line);
    if (tokens[0] == "n") {
      if (order >= 0) throw ParseError(line_no, "duplicate 'n' header");
      if (tokens.size() != 2) throw ParseError(line_no, "expected 'n <order>'");
      order = parse_int(tokens[1], line_no);
      if (order < 1) {
        throw ParseError(line_no, "order must be >= 1, got " + tokens[1]);
      }
    } else if (tokens[0] == "e") {
      if (order < 0) throw ParseError(line_no, "edge before 'n' header");
      if (tokens.size() != 4) throw ParseError(line_no, "expected 'e <i> <j> <t>'");
      EdgeId e{parse_int(tokens[1], line_no), parse_int(tokens[2], line_no),
               parse_int(tokens[3], line_no)};
      if (!validate_edge(order, e.from_city, e.to_city, e.layer)) {
        throw ParseError(line_no, "illegal edge " + to_string(e) +
                                      " for order " + std::to_string(order));
      }
      if (std::find(edges.begin(), edges.end(), e) != edges.end()) {
        throw ParseError(line_no, "duplicate edge " + to_string(e));
      }
      edges.push_back(e);
    } else {
      throw ParseError(line_no, "unknown directive '" + tokens[0] + "'");
    }
  }
  if (order < 0) throw ParseError(line_no, "missing 'n <order>' header");
  return TimeGraph(order, std::move(edges));
}

std::string serialize_timegraph(const TimeGraph& g) {
  std::ostringstream os;
  os << "n " << g.order() << "\n";
  for (const EdgeId& e : g.edges()) {
    os << "e " << e.from_city << " " << e.to_city << " " << e.layer << "\n";
  }
  return os.str();
}

}  // namespace hamtpath
