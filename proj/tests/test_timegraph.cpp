#include <doctest.h>

#include <set>

#include "hamtpath/fixtures.hpp"
#include "hamtpath/rng.hpp"
#include "hamtpath/timegraph.hpp"

using namespace hamtpath;

namespace {

// Independent edge-count oracle: enumerate every (i,j,t) triple and apply
// the layer rules directly, without going through the library.
int count_legal_triples(int n) {
  int count = 0;
  for (int t = 0; t <= n; ++t) {
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j <= n; ++j) {
        bool legal;
        if (t == 0) {
          legal = i == 0 && j >= 1 && j <= n;
        } else if (t == n) {
          legal = j == 0 && i >= 1 && i <= n;
        } else {
          legal = i >= 1 && i <= n && j >= 1 && j <= n && i != j;
        }
        if (legal) ++count;
      }
    }
  }
  return count;
}

const char* kFixtureText =
    "n 5\n"
    "e 0 1 0\n"
    "e 1 2 1\n"
    "e 1 3 1\n"
    "e 2 4 2\n"
    "e 3 5 2\n"
    "e 4 5 3\n"
    "e 5 4 3\n"
    "e 4 3 4\n"
    "e 5 2 4\n"
    "e 2 0 5\n"
    "e 3 0 5\n";

}  // namespace

TEST_CASE("complete time graph edge counts") {
  CHECK(complete_time_graph(1).edge_count() == 2);
  CHECK(complete_time_graph(2).edge_count() == 6);
  CHECK(complete_time_graph(5).edge_count() == 90);
  CHECK(complete_time_graph(5).edge_count() == count_legal_triples(5));
  for (int n = 1; n <= 8; ++n) {
    const auto g = complete_time_graph(n);
    const std::size_t expected = static_cast<std::size_t>(n) * (n - 1) * (n - 1) + 2 * n;
    CHECK(g.edge_count() == expected);
    CHECK(static_cast<int>(g.edge_count()) == count_legal_triples(n));
  }
  CHECK(complete_time_graph(1).edges() ==
        std::vector<EdgeId>{{0, 1, 0}, {1, 0, 1}});
  CHECK_THROWS_AS(complete_time_graph(0), std::invalid_argument);
  CHECK_THROWS_AS(complete_time_graph(-3), std::invalid_argument);
}

TEST_CASE("validate_edge follows the layer rules") {
  CHECK(validate_edge(3, 0, 2, 0));
  CHECK_FALSE(validate_edge(3, 1, 1, 1));  // self-loop
  CHECK_FALSE(validate_edge(3, 2, 1, 3));  // at t=n, j must be 0
  CHECK(validate_edge(3, 2, 0, 3));
  CHECK_FALSE(validate_edge(3, 1, 2, 0));  // at t=0, i must be 0
  CHECK_FALSE(validate_edge(3, 0, 0, 0));
  CHECK_FALSE(validate_edge(3, 0, 4, 0));
  CHECK_FALSE(validate_edge(3, 1, 2, 4));  // layer out of range
  CHECK_FALSE(validate_edge(3, 1, 2, -1));
  CHECK_FALSE(validate_edge(0, 0, 1, 0));
  // Every edge of K_n^T validates; every edge that validates is in K_n^T.
  for (int n = 1; n <= 4; ++n) {
    const auto g = complete_time_graph(n);
    std::set<EdgeId> in_complete(g.edges().begin(), g.edges().end());
    for (int t = -1; t <= n + 1; ++t) {
      for (int i = -1; i <= n + 1; ++i) {
        for (int j = -1; j <= n + 1; ++j) {
          CHECK(validate_edge(n, i, j, t) ==
                (in_complete.count(EdgeId{i, j, t}) == 1));
        }
      }
    }
  }
}

TEST_CASE("time graph construction rejects bad edge sets") {
  CHECK_THROWS_AS(TimeGraph(2, {{0, 1, 0}, {0, 1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(TimeGraph(2, {{1, 1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(TimeGraph(2, {{0, 3, 0}}), std::invalid_argument);
  const TimeGraph g(2, {{2, 0, 2}, {0, 1, 0}, {1, 2, 1}});
  // Canonical (t,i,j) order regardless of construction order.
  CHECK(g.edges() == std::vector<EdgeId>{{0, 1, 0}, {1, 2, 1}, {2, 0, 2}});
  CHECK(g.contains({1, 2, 1}));
  CHECK_FALSE(g.contains({2, 1, 1}));
  CHECK(g.without({1, 2, 1}).edge_count() == 2);
  CHECK_THROWS_AS(g.without({2, 1, 1}), std::invalid_argument);
}

TEST_CASE("time paths validate their city sequence") {
  CHECK(TimePath({1, 2}).is_hamiltonian());
  CHECK_FALSE(TimePath({1, 2, 4, 5, 2}).is_hamiltonian());
  CHECK(TimePath({1}).is_hamiltonian());
  CHECK_THROWS_AS(TimePath({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(TimePath({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(TimePath({1, 3}), std::invalid_argument);  // 3 > n=2
  CHECK_THROWS_AS(TimePath({}), std::invalid_argument);
  CHECK(TimePath({1, 2, 1}).induced_edges() ==
        std::vector<EdgeId>{{0, 1, 0}, {1, 2, 1}, {2, 1, 2}, {1, 0, 3}});
}

TEST_CASE("path_to_flow puts 1 on exactly the induced edges") {
  const auto k2 = complete_time_graph(2);
  const Flow f = path_to_flow(k2, TimePath({1, 2}));
  CHECK(f.value({0, 1, 0}) == 1);
  CHECK(f.value({1, 2, 1}) == 1);
  CHECK(f.value({2, 0, 2}) == 1);
  CHECK(f.value({0, 2, 0}) == 0);
  CHECK(f.values().size() == 3);

  const auto k1 = complete_time_graph(1);
  const Flow f1 = path_to_flow(k1, TimePath({1}));
  CHECK(f1.value({0, 1, 0}) == 1);
  CHECK(f1.value({1, 0, 1}) == 1);

  // The fixture graph admits the non-Hamiltonian walk (1,2,4,5,2): every
  // induced edge exists, so the flow builds, but it is not a htf.
  const auto s5 = fixture_graph("paper-s5");
  const TimePath walk({1, 2, 4, 5, 2});
  CHECK_FALSE(walk.is_hamiltonian());
  const Flow fw = path_to_flow(s5, walk);
  CHECK(fw.values().size() == 6);

  // Missing edge is named in the error.
  const TimeGraph sparse(2, {{0, 1, 0}, {2, 0, 2}});
  CHECK_THROWS_WITH_AS(path_to_flow(sparse, TimePath({1, 2})),
                       doctest::Contains("e(1,2,1)"), std::invalid_argument);
  CHECK_THROWS_AS(path_to_flow(sparse, TimePath({1})), std::invalid_argument);
}

TEST_CASE("layer sums") {
  const auto k3 = complete_time_graph(3);
  const Flow f = path_to_flow(k3, TimePath({2, 3, 1}));
  for (int t = 0; t <= 3; ++t) CHECK(f.layer_sum(t) == 1);
  CHECK(Flow(3).layer_sum(1) == 0);
  CHECK_THROWS_AS(f.layer_sum(4), std::out_of_range);
  CHECK_THROWS_AS(f.layer_sum(-1), std::out_of_range);

  // Half/half split below the single source edge of the fixture graph.
  const auto s5 = fixture_graph("paper-s5");
  Flow half(5);
  const Rat h(1, 2);
  for (const EdgeId& e : s5.edges()) half.set(e, e == EdgeId{0, 1, 0} ? Rat(1) : h);
  for (int t = 0; t <= 5; ++t) CHECK(half.layer_sum(t) == 1);
  CHECK(half.layer_sum(2) == 1);
}

TEST_CASE("flow set validates and keeps support minimal") {
  Flow f(2);
  CHECK_THROWS_AS(f.set({1, 1, 1}, Rat(1)), std::invalid_argument);
  f.set({0, 1, 0}, Rat(2, 4));
  CHECK(f.value({0, 1, 0}) == Rat(1, 2));
  f.set({0, 1, 0}, Rat(0));
  CHECK(f.values().empty());
}

TEST_CASE("time graph text format round-trips and reports errors") {
  CHECK(parse_timegraph("n 1\ne 0 1 0\ne 1 0 1\n") == complete_time_graph(1));
  // Comments, blank lines, arbitrary edge order and extra whitespace.
  CHECK(parse_timegraph("# a comment\n\nn 2\n\te 2 0 2  \ne 0 1 0") ==
        TimeGraph(2, {{0, 1, 0}, {2, 0, 2}}));

  const auto s5 = fixture_graph("paper-s5");
  CHECK(serialize_timegraph(s5) == kFixtureText);
  CHECK(parse_timegraph(kFixtureText) == s5);
  CHECK(serialize_timegraph(parse_timegraph(kFixtureText)) == kFixtureText);

  auto expect_parse_error = [](const std::string& text, int line) {
    try {
      parse_timegraph(text);
      FAIL("expected ParseError for: " << text);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
    }
  };
  expect_parse_error("n 2\ne 0 1 0\ne 1 1 1\n", 3);  // self-loop
  expect_parse_error("n 2\ne 0 1 0\ne 0 1 0\n", 3);  // duplicate
  expect_parse_error("e 0 1 0\n", 1);                // edge before header
  expect_parse_error("n 0\n", 1);                    // invalid order
  expect_parse_error("n 2\nn 2\n", 2);               // duplicate header
  expect_parse_error("n 2\ne 0 1\n", 2);             // short line
  expect_parse_error("n 2\ne 0 x 0\n", 2);           // non-integer
  expect_parse_error("n 2\nq 1 2 3\n", 2);           // unknown directive
  expect_parse_error("", 0);                         // missing header
}

TEST_CASE("round-trip is identity on random graphs") {
  SplitMix64 rng(20260810);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng.next() % 6);
    const TimeGraph full = complete_time_graph(n);
    std::vector<EdgeId> edges;
    for (const EdgeId& e : full.edges()) {
      if (rng.bernoulli(0.4)) edges.push_back(e);
    }
    const TimeGraph g(n, edges);
    CHECK(parse_timegraph(serialize_timegraph(g)) == g);
  }
}
