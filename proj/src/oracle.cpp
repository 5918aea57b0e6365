#include "hamtpath/oracle.hpp"

#include <algorithm>
#include <set>

namespace hamtpath {

namespace {

struct Search {
  const TimeGraph& g;
  const OracleOptions& opts;
  // out[t][i] = cities reachable from city i along a layer-t edge
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<bool> sink;  // sink[i] = has edge (i,0,n)
  std::vector<int> stack;
  std::vector<bool> visited;
  OracleResult result;
  std::set<EdgeId> on_htps;

  explicit Search(const TimeGraph& graph, const OracleOptions& options)
      : g(graph), opts(options) {
    const int n = g.order();
    out.assign(n + 1, std::vector<std::vector<int>>(n + 1));
    sink.assign(n + 1, false);
    for (const EdgeId& e : g.edges()) {
      if (e.layer == n) {
        sink[e.from_city] = true;
      } else {
        out[e.layer][e.from_city].push_back(e.to_city);
      }
    }
    visited.assign(n + 1, false);
  }

  void record_htp() {
    ++result.htp_count;
    TimePath path(stack);
    for (const EdgeId& e : path.induced_edges()) on_htps.insert(e);
    if (result.htps.size() < opts.htp_list_cap) {
      result.htps.push_back(std::move(path));
    } else {
      result.htps_truncated = true;
    }
  }

  // city = current position after `day` days; all of stack is visited.
  void dfs(int city, int day) {
    const int n = g.order();
    if (day == n) {
      if (sink[city]) record_htp();
      return;
    }
    for (int next : out[day][city]) {
      if (visited[next]) continue;
      visited[next] = true;
      stack.push_back(next);
      dfs(next, day + 1);
      stack.pop_back();
      visited[next] = false;
    }
  }

  OracleResult run() {
    for (int first : out[0][0]) {
      visited[first] = true;
      stack.push_back(first);
      dfs(first, 1);
      stack.pop_back();
      visited[first] = false;
    }
    result.edges_on_htps.assign(on_htps.begin(), on_htps.end());
    return std::move(result);
  }
};

}  // namespace

OracleResult enumerate_htps(const TimeGraph& g, const OracleOptions& opts) {
  if (g.order() > opts.order_cap) {
    throw InstanceTooLarge("time graph of order " + std::to_string(g.order()) +
                           " exceeds oracle cap " +
                           std::to_string(opts.order_cap));
  }
  return Search(g, opts).run();
}

bool is_hamiltonian(const TimeGraph& g, const OracleOptions& opts) {
  return enumerate_htps(g, opts).is_hamiltonian();
}

}  // namespace hamtpath
