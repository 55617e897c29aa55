#pragma once

#include <optional>
#include <vector>

#include "shiftbribery/rational.hpp"

namespace shiftbribery {

struct LpRow {
  std::vector<Rational> coeffs;
  Rational rhs;
  bool equality = false;  // coeffs . x == rhs instead of >=
};

/// Minimize objective . x subject to Ax >= b (with some rows equalities).
/// Variable bounds, when needed, are ordinary rows. All data exact rationals.
struct LinearProgram {
  int num_vars = 0;
  std::vector<Rational> objective;
  std::vector<LpRow> rows;

  explicit LinearProgram(int n) : num_vars(n), objective(n, Rational(0)) {}

  int add_ge(std::vector<Rational> coeffs, Rational rhs);
  int add_eq(std::vector<Rational> coeffs, Rational rhs);
};

/// A vertex of the feasible region: some num_vars linearly independent rows
/// are tight. tight_rows lists every row satisfied with equality.
struct BasicSolution {
  std::vector<Rational> x;
  Rational objective;
  std::vector<int> tight_rows;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::optional<BasicSolution> solution;  // present iff status == Optimal
};

/// Exact two-phase simplex with Bland's rule, followed by a crossover walk
/// that turns the optimal point into a vertex. Infeasible and Unbounded are
/// expected outcomes, not errors. Throws only if the feasible region
/// contains a line (then no vertex exists; none of the programs built here
/// do that).
LpResult solve_basic(const LinearProgram& lp);

/// Rank of the tight-row submatrix at the solution. An equality row counts
/// once, like a single tight inequality.
int count_tight_independent(const BasicSolution& sol, const LinearProgram& lp);

}  // namespace shiftbribery
