#include "shiftbribery/lp.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace shiftbribery {

int LinearProgram::add_ge(std::vector<Rational> coeffs, Rational rhs) {
  if (static_cast<int>(coeffs.size()) != num_vars)
    throw std::invalid_argument("row length must equal num_vars");
  rows.push_back(LpRow{std::move(coeffs), std::move(rhs), false});
  return static_cast<int>(rows.size()) - 1;
}

int LinearProgram::add_eq(std::vector<Rational> coeffs, Rational rhs) {
  if (static_cast<int>(coeffs.size()) != num_vars)
    throw std::invalid_argument("row length must equal num_vars");
  rows.push_back(LpRow{std::move(coeffs), std::move(rhs), true});
  return static_cast<int>(rows.size()) - 1;
}

namespace {

using Row = std::vector<Rational>;

// Row-echelon rank over the rationals.
int matrix_rank(std::vector<Row> m) {
  if (m.empty()) return 0;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[rank][col];
      for (int c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

// A nonzero vector in the nullspace of m, or nullopt when m has full column
// rank. Free variable set to 1, pivots back-substituted.
std::optional<Row> nullspace_vector(std::vector<Row> m, int cols) {
  int rows = static_cast<int>(m.size());
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    Rational inv = m[rank][col];
    for (int c = 0; c < cols; ++c) m[rank][c] /= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (int c = 0; c < cols; ++c) m[r][c] -= f * m[rank][c];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  if (rank == cols) return std::nullopt;
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  int free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  Row d(cols, Rational(0));
  d[free_col] = 1;
  for (int r = 0; r < rank; ++r) d[pivot_col[r]] = -m[r][free_col];
  return d;
}

// Dense simplex tableau in canonical form: basis columns are unit vectors
// and obj holds current reduced costs.
struct Tableau {
  std::vector<Row> rows;       // each ncols coefficients
  std::vector<Rational> rhs;   // all kept >= 0
  std::vector<int> basis;      // basis[i] = column basic in row i
  Row obj;                     // reduced costs
  Rational obj_rhs = 0;        // negated objective value
  int ncols = 0;

  void pivot(int row, int col) {
    Rational inv = rows[row][col];
    for (auto& v : rows[row]) v /= inv;
    rhs[row] /= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == row || rows[r][col] == 0) continue;
      Rational f = rows[r][col];
      for (int c = 0; c < ncols; ++c) rows[r][c] -= f * rows[row][c];
      rhs[r] -= f * rhs[row];
    }
    if (obj[col] != 0) {
      Rational f = obj[col];
      for (int c = 0; c < ncols; ++c) obj[c] -= f * rows[row][c];
      obj_rhs -= f * rhs[row];
    }
    basis[row] = col;
  }

  // Bland's rule: smallest eligible entering column, smallest basic
  // variable among the tied leaving rows. Returns Optimal or Unbounded.
  LpStatus run(const std::vector<bool>& allowed) {
    for (;;) {
      int enter = -1;
      for (int c = 0; c < ncols; ++c)
        if (allowed[c] && obj[c] < 0) {
          enter = c;
          break;
        }
      if (enter < 0) return LpStatus::Optimal;
      int leave = -1;
      Rational best;
      for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r][enter] <= 0) continue;
        Rational ratio = rhs[r] / rows[r][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[r] < basis[leave])) {
          leave = static_cast<int>(r);
          best = ratio;
        }
      }
      if (leave < 0) return LpStatus::Unbounded;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult solve_basic(const LinearProgram& lp) {
  int n = lp.num_vars;
  if (n <= 0) throw std::invalid_argument("LP needs at least one variable");
  int m = static_cast<int>(lp.rows.size());

  // A single-variable row a*x_j >= b with a > 0, b >= 0 (or the equality
  // variant) pins x_j nonnegative, so its negative split column is dropped.
  std::vector<bool> nonneg(n, false);
  for (const auto& row : lp.rows) {
    int nz = -1;
    bool single = true;
    for (int j = 0; j < n && single; ++j)
      if (row.coeffs[j] != 0) {
        if (nz >= 0) single = false;
        nz = j;
      }
    if (single && nz >= 0 && row.coeffs[nz] > 0 && row.rhs >= 0) nonneg[nz] = true;
  }

  // Columns: u_j for every variable, w_j for variables without a sign, one
  // slack per inequality.
  std::vector<int> ucol(n), wcol(n, -1);
  int ncols = 0;
  for (int j = 0; j < n; ++j) ucol[j] = ncols++;
  for (int j = 0; j < n; ++j)
    if (!nonneg[j]) wcol[j] = ncols++;
  std::vector<int> slack(m, -1);
  for (int i = 0; i < m; ++i)
    if (!lp.rows[i].equality) slack[i] = ncols++;
  int art0 = ncols;
  ncols += m;

  Tableau t;
  t.ncols = ncols;
  t.rows.assign(m, Row(ncols, Rational(0)));
  t.rhs.assign(m, Rational(0));
  t.basis.assign(m, 0);
  for (int i = 0; i < m; ++i) {
    const auto& row = lp.rows[i];
    bool flip = row.rhs < 0;
    Rational sign(flip ? -1 : 1);
    for (int j = 0; j < n; ++j) {
      if (row.coeffs[j] == 0) continue;
      t.rows[i][ucol[j]] = sign * row.coeffs[j];
      if (wcol[j] >= 0) t.rows[i][wcol[j]] = -sign * row.coeffs[j];
    }
    if (slack[i] >= 0) t.rows[i][slack[i]] = -sign;
    t.rhs[i] = sign * row.rhs;
    t.rows[i][art0 + i] = 1;
    t.basis[i] = art0 + i;
  }

  // Phase 1: minimize the artificial sum.
  t.obj.assign(ncols, Rational(0));
  t.obj_rhs = 0;
  for (int i = 0; i < m; ++i) {
    for (int c = 0; c < art0; ++c) t.obj[c] -= t.rows[i][c];
    t.obj_rhs -= t.rhs[i];
  }
  std::vector<bool> allowed(ncols, true);
  LpStatus st = t.run(allowed);
  assert(st == LpStatus::Optimal);  // phase 1 is bounded below by 0
  if (t.obj_rhs != 0) return LpResult{LpStatus::Infeasible, std::nullopt};

  // Drive leftover zero-valued artificials out of the basis; rows that
  // cannot pivot are redundant and dropped.
  for (int i = static_cast<int>(t.rows.size()) - 1; i >= 0; --i) {
    if (t.basis[i] < art0) continue;
    int col = -1;
    for (int c = 0; c < art0; ++c)
      if (t.rows[i][c] != 0) {
        col = c;
        break;
      }
    if (col >= 0) {
      t.pivot(i, col);
    } else {
      t.rows.erase(t.rows.begin() + i);
      t.rhs.erase(t.rhs.begin() + i);
      t.basis.erase(t.basis.begin() + i);
    }
  }

  // Phase 2 with the real objective; artificial columns stay out.
  for (int c = art0; c < ncols; ++c) allowed[c] = false;
  t.obj.assign(ncols, Rational(0));
  t.obj_rhs = 0;
  for (int j = 0; j < n; ++j) {
    t.obj[ucol[j]] = lp.objective[j];
    if (wcol[j] >= 0) t.obj[wcol[j]] = -lp.objective[j];
  }
  for (size_t i = 0; i < t.rows.size(); ++i) {
    Rational cb = t.obj[t.basis[i]];
    if (cb == 0) continue;
    for (int c = 0; c < ncols; ++c) t.obj[c] -= cb * t.rows[i][c];
    t.obj_rhs -= cb * t.rhs[i];
  }
  st = t.run(allowed);
  if (st == LpStatus::Unbounded) return LpResult{LpStatus::Unbounded, std::nullopt};

  std::vector<Rational> x(n, Rational(0));
  for (size_t i = 0; i < t.rows.size(); ++i) {
    for (int j = 0; j < n; ++j) {
      if (t.basis[i] == ucol[j]) x[j] += t.rhs[i];
      if (t.basis[i] == wcol[j]) x[j] -= t.rhs[i];
    }
  }

  // Crossover: walk along tight-row nullspace directions until the tight
  // set has full rank. Each step keeps every tight row tight, preserves
  // feasibility, and cannot change the objective (x is already optimal).
  auto row_value = [&](int i) {
    Rational s(0);
    for (int j = 0; j < n; ++j)
      if (lp.rows[i].coeffs[j] != 0) s += lp.rows[i].coeffs[j] * x[j];
    return s;
  };
  for (;;) {
    std::vector<Row> tight;
    for (int i = 0; i < m; ++i)
      if (lp.rows[i].equality || row_value(i) == lp.rows[i].rhs) tight.push_back(lp.rows[i].coeffs);
    auto d = nullspace_vector(tight, n);
    if (!d) break;
    Rational cd(0);
    for (int j = 0; j < n; ++j) cd += lp.objective[j] * (*d)[j];
    if (cd != 0)
      throw std::logic_error("crossover found an improving direction at an optimum");
    bool moved = false;
    for (int dir = 0; dir < 2 && !moved; ++dir) {
      Rational step;
      bool found = false;
      for (int i = 0; i < m; ++i) {
        Rational ad(0);
        for (int j = 0; j < n; ++j)
          if (lp.rows[i].coeffs[j] != 0) ad += lp.rows[i].coeffs[j] * (*d)[j];
        if (dir == 1) ad = -ad;
        if (ad >= 0) continue;
        Rational gap = row_value(i) - lp.rows[i].rhs;
        if (gap == 0) continue;  // already tight, d is in its nullspace
        Rational ratio = gap / -ad;
        if (!found || ratio < step) {
          step = ratio;
          found = true;
        }
      }
      if (found) {
        Rational sgn(dir == 0 ? 1 : -1);
        for (int j = 0; j < n; ++j) x[j] += sgn * step * (*d)[j];
        moved = true;
      }
    }
    if (!moved)
      throw std::logic_error("feasible region contains a line; no basic solution exists");
  }

  BasicSolution sol;
  sol.x = x;
  sol.objective = 0;
  for (int j = 0; j < n; ++j) sol.objective += lp.objective[j] * x[j];
  for (int i = 0; i < m; ++i)
    if (row_value(i) == lp.rows[i].rhs) sol.tight_rows.push_back(i);
  return LpResult{LpStatus::Optimal, std::move(sol)};
}

int count_tight_independent(const BasicSolution& sol, const LinearProgram& lp) {
  std::vector<Row> tight;
  for (int i = 0; i < static_cast<int>(lp.rows.size()); ++i) {
    Rational v(0);
    for (int j = 0; j < lp.num_vars; ++j)
      if (lp.rows[i].coeffs[j] != 0) v += lp.rows[i].coeffs[j] * sol.x[j];
    if (v < lp.rows[i].rhs || (lp.rows[i].equality && v != lp.rows[i].rhs))
      throw std::invalid_argument("solution is not feasible for this LP");
    if (v == lp.rows[i].rhs) tight.push_back(lp.rows[i].coeffs);
  }
  return matrix_rank(std::move(tight));
}

}  // namespace shiftbribery
