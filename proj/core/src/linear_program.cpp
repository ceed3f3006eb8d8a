#include "toric/linear_program.hpp"

#include <utility>

#include "toric/error.hpp"

namespace toric {

namespace {

// Tableau over rows of [A | b] with a maintained basis. The objective row is
// kept separately as reduced costs; `objective_value` tracks -z.
struct Tableau {
  RationalMatrix rows;  // each row: n coefficients then rhs
  std::vector<std::size_t> basis;
  std::size_t n = 0;

  void pivot(std::size_t r, std::size_t c, RationalPoint& reduced) {
    const Rational inv = 1 / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = 0; j <= n; ++j) rows[i][j] -= f * rows[r][j];
    }
    if (reduced[c] != 0) {
      const Rational f = reduced[c];
      for (std::size_t j = 0; j <= n; ++j) reduced[j] -= f * rows[r][j];
    }
    basis[r] = c;
  }

  // Reduced-cost vector (length n+1, last entry = -objective) for `cost`.
  RationalPoint reduced_costs(const RationalPoint& cost) const {
    RationalPoint reduced(n + 1, Rational(0));
    for (std::size_t j = 0; j < n; ++j) reduced[j] = cost[j];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Rational& cb = cost[basis[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= n; ++j) reduced[j] -= cb * rows[i][j];
    }
    return reduced;
  }

  // Runs simplex iterations over columns [0, allowed). Returns false when
  // the objective is unbounded below.
  bool optimize(RationalPoint& reduced, std::size_t allowed) {
    while (true) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (reduced[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == allowed) return true;
      std::size_t leave = rows.size();
      Rational best_ratio;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][enter] <= 0) continue;
        const Rational ratio = rows[i][n] / rows[i][enter];
        if (leave == rows.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == rows.size()) return false;
      pivot(leave, enter, reduced);
    }
  }
};

}  // namespace

LpSolution solve(const LinearProgram& lp) {
  const std::size_t m = lp.constraints.size();
  const std::size_t n = lp.cost.size();
  if (lp.rhs.size() != m) throw ContractError("LP rhs size mismatch");
  for (const auto& row : lp.constraints) {
    if (row.size() != n) throw ContractError("LP constraint width mismatch");
  }

  // Phase one: artificial variables n..n+m-1 with rhs made non-negative.
  Tableau t;
  t.n = n + m;
  t.rows.assign(m, RationalPoint(n + m + 1, Rational(0)));
  t.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = lp.rhs[i] < 0;
    for (std::size_t j = 0; j < n; ++j) {
      t.rows[i][j] = flip ? Rational(-lp.constraints[i][j]) : lp.constraints[i][j];
    }
    t.rows[i][n + i] = 1;
    t.rows[i][n + m] = flip ? Rational(-lp.rhs[i]) : lp.rhs[i];
    t.basis[i] = n + i;
  }
  RationalPoint phase_one_cost(n + m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase_one_cost[n + i] = 1;
  RationalPoint reduced = t.reduced_costs(phase_one_cost);
  t.optimize(reduced, n + m);
  if (-reduced[n + m] != 0) return {LpStatus::infeasible, Rational(0), {}};

  // Drive artificial variables out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < n) {
      ++i;
      continue;
    }
    std::size_t col = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (t.rows[i][j] != 0) {
        col = j;
        break;
      }
    }
    if (col == n) {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
      continue;
    }
    t.pivot(i, col, reduced);
    ++i;
  }

  // Phase two on the original columns (artificials stay at zero).
  RationalPoint cost(n + m, Rational(0));
  for (std::size_t j = 0; j < n; ++j) cost[j] = lp.cost[j];
  reduced = t.reduced_costs(cost);
  if (!t.optimize(reduced, n)) return {LpStatus::unbounded, Rational(0), {}};

  LpSolution sol;
  sol.status = LpStatus::optimal;
  sol.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (t.basis[i] < n) sol.x[t.basis[i]] = t.rows[i][t.n];
  }
  sol.value = -reduced[t.n];
  return sol;
}

}  // namespace toric
