#include "hamtpath/digraph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace hamtpath {

namespace {

std::string vertex_name(const Digraph& d, int v) {
  if (v == d.source()) return "S";
  if (v == d.terminal()) return "T";
  return std::to_string(v);
}

}  // namespace

Digraph::Digraph(int inner_count, std::vector<std::pair<int, int>> edges)
    : inner_count_(inner_count), edges_(std::move(edges)) {
  if (inner_count_ < 1) {
    throw std::invalid_argument("digraph needs at least one inner vertex");
  }
  const int t = terminal();
  for (const auto& [u, v] : edges_) {
    if (u < 0 || u > t || v < 0 || v > t) {
      throw std::invalid_argument("digraph edge endpoint out of range");
    }
    if (u == v) throw std::invalid_argument("self-loop in digraph");
    if (v == 0) throw std::invalid_argument("edge into source S");
    if (u == t) throw std::invalid_argument("edge out of terminal T");
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw std::invalid_argument("duplicate digraph edge (" +
                                vertex_name(*this, dup->first) + "," +
                                vertex_name(*this, dup->second) + ")");
  }
}

bool Digraph::contains(int u, int v) const {
  return std::binary_search(edges_.begin(), edges_.end(), std::pair(u, v));
}

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) tokens.push_back(tok);
  return tokens;
}

int parse_vertex(const std::string& tok, int n, int line_no) {
  if (tok == "S") return 0;
  if (tok == "T") return n + 1;
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line_no, "expected vertex token S, T or integer, got '" +
                                  tok + "'");
  }
  if (value < 1 || value > n) {
    throw ParseError(line_no, "inner vertex " + tok + " out of range 1.." +
                                  std::to_string(n));
  }
  return value;
}

}  // namespace

Digraph parse_digraph(std::string_view text) {
  std::istringstream input{std::string(text)};
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(input, line)) {
    ++line_no;
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    auto tokens = tokens_of(line);
    if (tokens[0] == "d") {
      if (n >= 0) throw ParseError(line_no, "duplicate 'd' header");
      if (tokens.size() != 2) throw ParseError(line_no, "expected 'd <n>'");
      auto [ptr, ec] = std::from_chars(
          tokens[1].data(), tokens[1].data() + tokens[1].size(), n);
      if (ec != std::errc() || ptr != tokens[1].data() + tokens[1].size() ||
          n < 1) {
        throw ParseError(line_no, "invalid inner vertex count '" + tokens[1] + "'");
      }
    } else if (tokens[0] == "e") {
      if (n < 0) throw ParseError(line_no, "edge before 'd' header");
      if (tokens.size() != 3) throw ParseError(line_no, "expected 'e <u> <v>'");
      int u = parse_vertex(tokens[1], n, line_no);
      int v = parse_vertex(tokens[2], n, line_no);
      if (u == v) throw ParseError(line_no, "self-loop on vertex " + tokens[1]);
      if (v == 0) throw ParseError(line_no, "edge into source S");
      if (u == n + 1) throw ParseError(line_no, "edge out of terminal T");
      if (std::find(edges.begin(), edges.end(), std::pair(u, v)) != edges.end()) {
        throw ParseError(line_no, "duplicate edge (" + tokens[1] + "," +
                                      tokens[2] + ")");
      }
      edges.emplace_back(u, v);
    } else {
      throw ParseError(line_no, "unknown directive '" + tokens[0] + "'");
    }
  }
  if (n < 0) throw ParseError(line_no, "missing 'd <n>' header");
  return Digraph(n, std::move(edges));
}

std::string serialize_digraph(const Digraph& d) {
  std::ostringstream os;
  os << "d " << d.inner_count() << "\n";
  for (const auto& [u, v] : d.edges()) {
    os << "e " << vertex_name(d, u) << " " << vertex_name(d, v) << "\n";
  }
  return os.str();
}

TimeGraph reduce_hampath(const Digraph& d) {
  const int n = d.inner_count();
  const int term = d.terminal();
  std::vector<EdgeId> edges;
  for (const auto& [u, v] : d.edges()) {
    if (u == 0 && v != term) {
      edges.push_back({0, v, 0});
    } else if (u != 0 && v == term) {
      edges.push_back({u, 0, n});
    } else if (u != 0 && v != term) {
      for (int t = 1; t <= n - 1; ++t) edges.push_back({u, v, t});
    }
    // (S,T) contributes no edge.
  }
  return TimeGraph(n, std::move(edges));
}

namespace {

bool hampath_dfs(const std::vector<std::vector<int>>& out, int terminal,
                 int current, int visited_count, std::vector<bool>& visited) {
  const int n = terminal - 1;
  if (visited_count == n) {
    return std::find(out[current].begin(), out[current].end(), terminal) !=
           out[current].end();
  }
  for (int next : out[current]) {
    if (next == terminal || visited[next]) continue;
    visited[next] = true;
    if (hampath_dfs(out, terminal, next, visited_count + 1, visited)) {
      return true;
    }
    visited[next] = false;
  }
  return false;
}

}  // namespace

bool hampath_oracle(const Digraph& d, int cap) {
  const int n = d.inner_count();
  if (n > cap) {
    throw InstanceTooLarge("digraph with " + std::to_string(n) +
                           " inner vertices exceeds oracle cap " +
                           std::to_string(cap));
  }
  std::vector<std::vector<int>> out(n + 2);
  for (const auto& [u, v] : d.edges()) out[u].push_back(v);
  std::vector<bool> visited(n + 1, false);
  return hampath_dfs(out, d.terminal(), 0, 0, visited);
}

}  // namespace hamtpath
