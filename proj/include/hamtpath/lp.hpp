#pragma once

#include <atomic>
#include <cstdint>
#include <vector>

#include "hamtpath/rational.hpp"
#include "hamtpath/timegraph.hpp"

namespace hamtpath {

// The equality system LP(G,e) over the edges of G:
//   row 0:                 sum_j f(e_{0j0}) = 1
//   rows 1 .. n^2:         per interior vertex (i,t), out-sum minus in-sum
//                          = 0, ordered i-major then t (i=1..n, t=1..n)
//   rows n^2+1 .. n^2+n:   per city i, sum of all out-edges of i across
//                          layers 1..n (including e_{i0n}) = 1
//   row n^2+n+1:           sum_i f(e_{i0n}) = 1
//   row n^2+n+2:           f(e) = 1 for the pinned edge
// plus f >= 0 on every column. Columns are the edges of G in canonical
// order; absent edges contribute no column. All coefficients are -1, 0 or 1.
struct LPInstance {
  struct Row {
    std::vector<std::pair<int, int>> coeffs;  // (column, coefficient), sorted
    int rhs = 0;
  };

  int order = 0;
  std::vector<EdgeId> columns;
  std::vector<Row> rows;
  int pinned_column = -1;

  std::size_t num_rows() const { return rows.size(); }
  std::size_t num_cols() const { return columns.size(); }
  // Column of an edge, or -1 if the edge is not a column.
  int column_of(const EdgeId& e) const;
};

// Throws std::invalid_argument if e is not an edge of g.
LPInstance build_lp(const TimeGraph& g, const EdgeId& e);

// Outcome of an exact feasibility decision. Exactly one side is meaningful:
// a feasible point satisfying every row with all values >= 0, or a Farkas
// certificate y with y^T A <= 0 componentwise and y^T b > 0.
struct FeasibilityResult {
  bool feasible = false;
  Flow point;                    // when feasible
  std::vector<Rat> certificate;  // one multiplier per row when infeasible

  FeasibilityResult() : point(1) {}
};

// Phase-I simplex with Bland's rule over exact rationals. Always terminates
// and always returns a result that passes verify_certificate; a failure of
// that internal self-check raises CertificateError (never expected).
FeasibilityResult solve_feasibility(const LPInstance& lp);

// Re-derives the claim of `r` against `lp` by direct exact arithmetic.
bool verify_certificate(const LPInstance& lp, const FeasibilityResult& r);

// An edge is useless iff LP(G,e) is infeasible: no htp can pass through it.
bool is_useless(const TimeGraph& g, const EdgeId& e);

// Builds, solves, self-verifies, and (when feasible) checks that every
// layer sums to exactly 1. The workhorse behind is_useless, pruning and the
// search campaigns.
FeasibilityResult decide_lp(const TimeGraph& g, const EdgeId& e);

class CertificateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Process-wide instrumentation, updated by solve_feasibility / decide_lp.
struct SolveStats {
  std::atomic<std::uint64_t> solves{0};
  std::atomic<std::uint64_t> feasible{0};
  std::atomic<std::uint64_t> infeasible{0};
  std::atomic<std::uint64_t> certificates_verified{0};
  std::atomic<std::uint64_t> layer_checks{0};

  void reset();
};

SolveStats& solve_stats();

}  // namespace hamtpath
