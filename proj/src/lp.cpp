#include "hamtpath/lp.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hamtpath {

int LPInstance::column_of(const EdgeId& e) const {
  auto it = std::lower_bound(columns.begin(), columns.end(), e);
  if (it == columns.end() || *it != e) return -1;
  return static_cast<int>(it - columns.begin());
}

LPInstance build_lp(const TimeGraph& g, const EdgeId& e) {
  if (!g.contains(e)) {
    throw std::invalid_argument("edge " + to_string(e) + " not in graph");
  }
  const int n = g.order();
  LPInstance lp;
  lp.order = n;
  lp.columns = g.edges();
  lp.rows.resize(static_cast<std::size_t>(n) * n + n + 3);

  // Row layout: 0 source; 1..n^2 conservation at (i,t), i-major;
  // n^2+1..n^2+n city usage; n^2+n+1 sink; n^2+n+2 pin.
  auto conservation_row = [n](int i, int t) { return 1 + (i - 1) * n + (t - 1); };
  const int city_row0 = n * n + 1;
  const int sink_row = n * n + n + 1;
  const int pin_row = n * n + n + 2;

  lp.rows[0].rhs = 1;
  for (int i = 1; i <= n; ++i) lp.rows[city_row0 + (i - 1)].rhs = 1;
  lp.rows[sink_row].rhs = 1;
  lp.rows[pin_row].rhs = 1;

  for (int c = 0; c < static_cast<int>(lp.columns.size()); ++c) {
    const EdgeId& ed = lp.columns[c];
    if (ed.layer == 0) {
      lp.rows[0].coeffs.emplace_back(c, 1);
      lp.rows[conservation_row(ed.to_city, 1)].coeffs.emplace_back(c, -1);
    } else {
      // Out-edge of vertex (from_city, layer) and of its city.
      lp.rows[conservation_row(ed.from_city, ed.layer)].coeffs.emplace_back(c, 1);
      lp.rows[city_row0 + (ed.from_city - 1)].coeffs.emplace_back(c, 1);
      if (ed.layer == n) {
        lp.rows[sink_row].coeffs.emplace_back(c, 1);
      } else {
        lp.rows[conservation_row(ed.to_city, ed.layer + 1)].coeffs.emplace_back(c, -1);
      }
    }
  }
  lp.pinned_column = lp.column_of(e);
  lp.rows[pin_row].coeffs.emplace_back(lp.pinned_column, 1);

  // Sweeping columns in ascending order above can interleave +1/-1 entries
  // out of column order within a conservation row.
  for (auto& row : lp.rows) {
    std::sort(row.coeffs.begin(), row.coeffs.end());
  }
  return lp;
}

namespace {

// Dense Phase-I tableau over exact rationals. Columns 0..norig-1 are the
// LP variables, norig..norig+m-1 the artificials, last column the rhs.
// The extra row holds reduced costs and (negated) objective value.
class PhaseOneSimplex {
 public:
  PhaseOneSimplex(const LPInstance& lp, const std::vector<int>& kept,
                  const std::vector<int>& row_sign)
      : norig_(static_cast<int>(lp.num_cols())),
        m_(static_cast<int>(kept.size())),
        total_(norig_ + m_),
        tableau_(m_ + 1, std::vector<Rat>(total_ + 1, Rat(0))),
        basis_(m_) {
    for (int k = 0; k < m_; ++k) {
      const auto& row = lp.rows[kept[k]];
      const int s = row_sign[k];
      for (const auto& [col, coef] : row.coeffs) {
        tableau_[k][col] = Rat(coef * s);
      }
      tableau_[k][norig_ + k] = 1;
      tableau_[k][total_] = Rat(row.rhs * s);
      basis_[k] = norig_ + k;
    }
    // Reduced costs for the all-artificial basis: c_j - sum of column j
    // over the rows; artificial columns start at zero.
    auto& z = tableau_[m_];
    for (int j = 0; j <= total_; ++j) {
      Rat sum(0);
      for (int k = 0; k < m_; ++k) sum += tableau_[k][j];
      if (j < norig_ || j == total_) z[j] = -sum;
    }
  }

  // Runs Bland's rule to optimality. Returns the Phase-I objective value.
  Rat optimize() {
    // Bland's rule cannot cycle; the cap only guards against a defect here.
    for (long iter = 0; iter < kMaxIterations; ++iter) {
      const int entering = pick_entering();
      if (entering < 0) {
        Rat objective = -tableau_[m_][total_];
        return objective;
      }
      const int leaving = pick_leaving(entering);
      if (leaving < 0) {
        throw std::logic_error("phase-1 objective unbounded below");
      }
      pivot(leaving, entering);
    }
    throw std::logic_error("simplex iteration cap exceeded");
  }

  // Value of original variable j in the current basic solution.
  std::vector<Rat> solution() const {
    std::vector<Rat> x(norig_, Rat(0));
    for (int k = 0; k < m_; ++k) {
      if (basis_[k] < norig_) x[basis_[k]] = tableau_[k][total_];
    }
    return x;
  }

  // Simplex multiplier of kept row k: artificial k has cost 1, so its
  // reduced cost is 1 - y_k.
  Rat multiplier(int k) const { return Rat(1) - tableau_[m_][norig_ + k]; }

 private:
  static constexpr long kMaxIterations = 1000000;

  // Lowest-index column with a negative reduced cost (Bland).
  int pick_entering() const {
    const auto& z = tableau_[m_];
    for (int j = 0; j < total_; ++j) {
      if (sgn(z[j]) < 0) return j;
    }
    return -1;
  }

  // Minimum-ratio row; ties broken by the lowest basis variable index
  // (Bland), then by row index, though the former is already unique.
  int pick_leaving(int entering) const {
    int best = -1;
    for (int k = 0; k < m_; ++k) {
      if (sgn(tableau_[k][entering]) <= 0) continue;
      if (best < 0) {
        best = k;
        continue;
      }
      // Compare rhs_k / col_k vs rhs_best / col_best by cross-multiplying;
      // both denominators are positive.
      const int c = cmp(tableau_[k][total_] * tableau_[best][entering],
                        tableau_[best][total_] * tableau_[k][entering]);
      if (c < 0 || (c == 0 && basis_[k] < basis_[best])) best = k;
    }
    return best;
  }

  void pivot(int r, int s) {
    auto& prow = tableau_[r];
    const Rat inv = 1 / prow[s];
    for (int j = 0; j <= total_; ++j) {
      if (sgn(prow[j]) != 0) prow[j] *= inv;
    }
    prow[s] = 1;
    for (int k = 0; k <= m_; ++k) {
      if (k == r) continue;
      auto& row = tableau_[k];
      if (sgn(row[s]) == 0) continue;
      const Rat factor = row[s];
      for (int j = 0; j <= total_; ++j) {
        if (sgn(prow[j]) != 0) row[j] -= factor * prow[j];
      }
      row[s] = 0;
    }
    basis_[r] = s;
  }

  int norig_;
  int m_;
  int total_;
  std::vector<std::vector<Rat>> tableau_;
  std::vector<int> basis_;
};

FeasibilityResult feasible_result(const LPInstance& lp,
                                  const std::vector<Rat>& x) {
  FeasibilityResult r;
  r.feasible = true;
  r.point = Flow(lp.order);
  for (int c = 0; c < static_cast<int>(lp.num_cols()); ++c) {
    if (sgn(x[c]) != 0) r.point.set(lp.columns[c], x[c]);
  }
  return r;
}

FeasibilityResult infeasible_result(std::size_t num_rows) {
  FeasibilityResult r;
  r.feasible = false;
  r.certificate.assign(num_rows, Rat(0));
  return r;
}

}  // namespace

FeasibilityResult solve_feasibility(const LPInstance& lp) {
  SolveStats& stats = solve_stats();
  stats.solves.fetch_add(1, std::memory_order_relaxed);

  // A row with no columns is 0 = rhs: contradictory on its own when
  // rhs != 0 (the unit certificate on that row is a Farkas witness),
  // vacuous otherwise. Dropped rows keep multiplier 0.
  std::vector<int> kept;
  std::vector<int> row_sign;
  for (int i = 0; i < static_cast<int>(lp.num_rows()); ++i) {
    const auto& row = lp.rows[i];
    if (row.coeffs.empty()) {
      if (row.rhs != 0) {
        FeasibilityResult r = infeasible_result(lp.num_rows());
        r.certificate[i] = Rat(row.rhs > 0 ? 1 : -1);
        if (!verify_certificate(lp, r)) {
          throw CertificateError("presolve certificate failed verification");
        }
        stats.infeasible.fetch_add(1, std::memory_order_relaxed);
        stats.certificates_verified.fetch_add(1, std::memory_order_relaxed);
        return r;
      }
      continue;
    }
    kept.push_back(i);
    row_sign.push_back(row.rhs < 0 ? -1 : 1);
  }

  PhaseOneSimplex simplex(lp, kept, row_sign);
  const Rat objective = simplex.optimize();

  FeasibilityResult r;
  if (sgn(objective) == 0) {
    r = feasible_result(lp, simplex.solution());
    stats.feasible.fetch_add(1, std::memory_order_relaxed);
  } else {
    r = infeasible_result(lp.num_rows());
    for (int k = 0; k < static_cast<int>(kept.size()); ++k) {
      r.certificate[kept[k]] = Rat(row_sign[k]) * simplex.multiplier(k);
    }
    stats.infeasible.fetch_add(1, std::memory_order_relaxed);
  }
  if (!verify_certificate(lp, r)) {
    throw CertificateError("solver output failed certificate verification");
  }
  stats.certificates_verified.fetch_add(1, std::memory_order_relaxed);
  return r;
}

bool verify_certificate(const LPInstance& lp, const FeasibilityResult& r) {
  if (r.feasible) {
    // The point must live on the LP's columns and be nonnegative.
    for (const auto& [e, v] : r.point.values()) {
      if (lp.column_of(e) < 0) return false;
      if (sgn(v) < 0) return false;
    }
    for (const auto& row : lp.rows) {
      Rat lhs(0);
      for (const auto& [col, coef] : row.coeffs) {
        lhs += Rat(coef) * r.point.value(lp.columns[col]);
      }
      if (lhs != row.rhs) return false;
    }
    return true;
  }
  if (r.certificate.size() != lp.num_rows()) return false;
  // y^T A <= 0 componentwise, y^T b > 0.
  std::vector<Rat> yta(lp.num_cols(), Rat(0));
  Rat ytb(0);
  for (std::size_t i = 0; i < lp.num_rows(); ++i) {
    const Rat& y = r.certificate[i];
    if (sgn(y) == 0) continue;
    for (const auto& [col, coef] : lp.rows[i].coeffs) {
      yta[col] += y * Rat(coef);
    }
    ytb += y * Rat(lp.rows[i].rhs);
  }
  for (const Rat& v : yta) {
    if (sgn(v) > 0) return false;
  }
  return sgn(ytb) > 0;
}

FeasibilityResult decide_lp(const TimeGraph& g, const EdgeId& e) {
  FeasibilityResult r = solve_feasibility(build_lp(g, e));
  if (r.feasible) {
    // Rows (1)+(2) force every layer of a feasible point to sum to 1;
    // a mismatch means the solver or the builder is broken.
    for (int t = 0; t <= g.order(); ++t) {
      if (r.point.layer_sum(t) != 1) {
        throw CertificateError("feasible point has layer " +
                               std::to_string(t) + " sum != 1");
      }
    }
    solve_stats().layer_checks.fetch_add(1, std::memory_order_relaxed);
  }
  return r;
}

bool is_useless(const TimeGraph& g, const EdgeId& e) {
  return !decide_lp(g, e).feasible;
}

void SolveStats::reset() {
  solves = 0;
  feasible = 0;
  infeasible = 0;
  certificates_verified = 0;
  layer_checks = 0;
}

SolveStats& solve_stats() {
  static SolveStats stats;
  return stats;
}

}  // namespace hamtpath
