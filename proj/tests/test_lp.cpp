#include <doctest.h>

#include <algorithm>

#include "hamtpath/fixtures.hpp"
#include "hamtpath/lp.hpp"
#include "hamtpath/oracle.hpp"
#include "hamtpath/rng.hpp"

using namespace hamtpath;

namespace {

TimeGraph random_graph(SplitMix64& rng, int n, double p) {
  const TimeGraph full = complete_time_graph(n);
  std::vector<EdgeId> edges;
  for (const EdgeId& e : full.edges()) {
    if (rng.bernoulli(p)) edges.push_back(e);
  }
  return TimeGraph(n, std::move(edges));
}

FeasibilityResult as_feasible(Flow point) {
  FeasibilityResult r;
  r.feasible = true;
  r.point = std::move(point);
  return r;
}

// The fixture's fractional witness for the source edge: 1 on e(0,1,0) and
// 1/2 on the other ten edges.
Flow half_flow() {
  const auto g = fixture_graph("paper-s5");
  Flow f(5);
  for (const EdgeId& e : g.edges()) {
    f.set(e, e == EdgeId{0, 1, 0} ? Rat(1) : Rat(1, 2));
  }
  return f;
}

}  // namespace

TEST_CASE("build_lp has the documented shape") {
  const auto k2 = complete_time_graph(2);
  const auto lp = build_lp(k2, {0, 1, 0});
  CHECK(lp.num_rows() == 9);  // 1 + 4 + 2 + 1 + 1
  CHECK(lp.num_cols() == 6);
  CHECK(lp.order == 2);
  CHECK(lp.pinned_column == lp.column_of({0, 1, 0}));

  const auto s5 = fixture_graph("paper-s5");
  const auto lp5 = build_lp(s5, {0, 1, 0});
  CHECK(lp5.num_rows() == 33);  // 1 + 25 + 5 + 1 + 1
  CHECK(lp5.num_cols() == 11);

  for (const auto& row : lp.rows) {
    for (const auto& [col, coef] : row.coeffs) {
      CHECK(col >= 0);
      CHECK(col < static_cast<int>(lp.num_cols()));
      CHECK((coef == 1 || coef == -1));
    }
  }
  // The pin row is the single row holding the pinned column with +1, rhs 1.
  const auto& pin = lp.rows.back();
  REQUIRE(pin.coeffs.size() == 1);
  CHECK(pin.coeffs[0] == std::pair(lp.pinned_column, 1));
  CHECK(pin.rhs == 1);

  CHECK_THROWS_AS(build_lp(k2, {1, 2, 9}), std::invalid_argument);
  CHECK_THROWS_AS(build_lp(fixture_graph("paper-s5"), {2, 1, 1}),
                  std::invalid_argument);
}

TEST_CASE("build_lp row semantics on a one-edge graph") {
  // Conservation at (1,1) reads -f(e(0,1,0)) = 0, contradicting the pin.
  const TimeGraph g(2, {{0, 1, 0}});
  const auto lp = build_lp(g, {0, 1, 0});
  REQUIRE(lp.num_rows() == 9);
  CHECK(lp.rows[0].coeffs == std::vector{std::pair(0, 1)});  // source row
  CHECK(lp.rows[0].rhs == 1);
  CHECK(lp.rows[1].coeffs == std::vector{std::pair(0, -1)});  // vertex (1,1)
  CHECK(lp.rows[1].rhs == 0);
  const auto result = solve_feasibility(lp);
  CHECK_FALSE(result.feasible);
  CHECK(verify_certificate(lp, result));
}

TEST_CASE("any htf through the pinned edge is a feasible point") {
  const auto k2 = complete_time_graph(2);
  const Flow htf = path_to_flow(k2, TimePath({1, 2}));
  for (const EdgeId& e : TimePath({1, 2}).induced_edges()) {
    const auto lp = build_lp(k2, e);
    CHECK(verify_certificate(lp, as_feasible(htf)));
  }
  // ... and the solver agrees.
  const auto result = solve_feasibility(build_lp(k2, {0, 1, 0}));
  CHECK(result.feasible);
  CHECK(result.point.value({0, 1, 0}) == 1);
}

TEST_CASE("verify_certificate rejects wrong claims") {
  const auto k2 = complete_time_graph(2);
  const auto lp = build_lp(k2, {0, 1, 0});
  CHECK_FALSE(verify_certificate(lp, as_feasible(Flow(2))));  // zero flow
  // A point using an edge that is not a column of the LP.
  const TimeGraph sparse(2, {{0, 1, 0}, {1, 2, 1}, {2, 0, 2}});
  const auto lp_sparse = build_lp(sparse, {0, 1, 0});
  Flow off_support = path_to_flow(k2, TimePath({2, 1}));
  CHECK_FALSE(verify_certificate(lp_sparse, as_feasible(off_support)));
  // A negative point that satisfies the equalities is still rejected.
  LPInstance toy;
  toy.order = 2;
  toy.columns = {{0, 1, 0}, {0, 2, 0}};
  toy.rows = {{{{0, 1}, {1, -1}}, 0}};  // f0 - f1 = 0
  toy.pinned_column = 0;
  Flow neg(2);
  neg.set({0, 1, 0}, Rat(-1));
  neg.set({0, 2, 0}, Rat(-1));
  CHECK_FALSE(verify_certificate(toy, as_feasible(neg)));
  Flow pos(2);
  pos.set({0, 1, 0}, Rat(1));
  pos.set({0, 2, 0}, Rat(1));
  CHECK(verify_certificate(toy, as_feasible(pos)));
  // Zeroed-out certificate is no Farkas witness.
  const auto infeasible_lp = build_lp(TimeGraph(2, {{0, 1, 0}}), {0, 1, 0});
  auto result = solve_feasibility(infeasible_lp);
  REQUIRE_FALSE(result.feasible);
  CHECK(verify_certificate(infeasible_lp, result));
  std::fill(result.certificate.begin(), result.certificate.end(), Rat(0));
  CHECK_FALSE(verify_certificate(infeasible_lp, result));
  // Wrong dimension.
  result.certificate.pop_back();
  CHECK_FALSE(verify_certificate(infeasible_lp, result));
}

TEST_CASE("fixture edges classify exactly as source-useful, rest useless") {
  const auto s5 = fixture_graph("paper-s5");
  CHECK_FALSE(is_useless(s5, {0, 1, 0}));
  for (const EdgeId& e : s5.edges()) {
    if (e == EdgeId{0, 1, 0}) continue;
    CHECK(is_useless(s5, e));
  }
  // The published fractional witness passes every row of LP(G, e(0,1,0)).
  const auto lp = build_lp(s5, {0, 1, 0});
  CHECK(verify_certificate(lp, as_feasible(half_flow())));
}

TEST_CASE("no edge of a complete graph is useless") {
  for (int n = 1; n <= 3; ++n) {
    const auto g = complete_time_graph(n);
    for (const EdgeId& e : g.edges()) CHECK_FALSE(is_useless(g, e));
  }
}

TEST_CASE("feasible points conserve flow across layers") {
  const auto s5 = fixture_graph("paper-s5");
  const auto result = decide_lp(s5, {0, 1, 0});
  REQUIRE(result.feasible);
  for (int t = 0; t <= 5; ++t) CHECK(result.point.layer_sum(t) == 1);
}

TEST_CASE("solver output is deterministic") {
  const auto s5 = fixture_graph("paper-s5");
  const auto lp = build_lp(s5, {0, 1, 0});
  const auto a = solve_feasibility(lp);
  const auto b = solve_feasibility(lp);
  CHECK(a.feasible == b.feasible);
  CHECK(a.point == b.point);
  const auto lp2 = build_lp(s5, {1, 2, 1});
  const auto c = solve_feasibility(lp2);
  const auto d = solve_feasibility(lp2);
  REQUIRE_FALSE(c.feasible);
  CHECK(c.certificate == d.certificate);
}

TEST_CASE("htf-feasibility and useless-edge soundness on random graphs") {
  SplitMix64 rng(424242);
  int graphs = 0;
  while (graphs < 40) {
    const int n = 2 + static_cast<int>(rng.next() % 3);  // 2..4
    const TimeGraph g = random_graph(rng, n, 0.45);
    if (g.empty()) continue;
    ++graphs;
    const auto oracle = enumerate_htps(g);
    // Every htp is a feasible point of LP(g,e) for every edge on it.
    for (const TimePath& p : oracle.htps) {
      const Flow f = path_to_flow(g, p);
      for (const EdgeId& e : p.induced_edges()) {
        CHECK(verify_certificate(build_lp(g, e), as_feasible(f)));
      }
    }
    // A useless edge never lies on an oracle htp, and its removal keeps
    // the htp set intact.
    for (const EdgeId& e : g.edges()) {
      if (!is_useless(g, e)) continue;
      CHECK_FALSE(std::binary_search(oracle.edges_on_htps.begin(),
                                     oracle.edges_on_htps.end(), e));
      const auto after = enumerate_htps(g.without(e));
      CHECK(after.htp_count == oracle.htp_count);
      CHECK(after.htps == oracle.htps);
    }
  }
}

TEST_CASE("solve statistics count every decision") {
  auto& stats = solve_stats();
  stats.reset();
  const auto s5 = fixture_graph("paper-s5");
  for (const EdgeId& e : s5.edges()) decide_lp(s5, e);
  CHECK(stats.solves.load() == 11);
  CHECK(stats.certificates_verified.load() == 11);
  CHECK(stats.feasible.load() == 1);
  CHECK(stats.infeasible.load() == 10);
  CHECK(stats.layer_checks.load() == 1);
}
