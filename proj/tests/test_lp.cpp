#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>
#include <random>

#include "shiftbribery/lp.hpp"

using namespace shiftbribery;

namespace {

// Independent oracle: enumerate every subset of num_vars rows, solve the
// square system by Gaussian elimination, keep feasible points, and take the
// best objective. Deliberately shares nothing with the simplex path.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> a,
                                                  std::vector<Rational> b) {
  int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return std::nullopt;  // singular
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

struct EnumerationResult {
  bool feasible_vertex = false;
  Rational best_objective;
};

EnumerationResult enumerate_vertices(const LinearProgram& lp) {
  EnumerationResult result;
  int m = static_cast<int>(lp.rows.size());
  int n = lp.num_vars;
  std::vector<int> pick(n);
  auto feasible = [&](const std::vector<Rational>& x) {
    for (const auto& row : lp.rows) {
      Rational v = 0;
      for (int j = 0; j < n; ++j) v += row.coeffs[j] * x[j];
      if (row.equality ? v != row.rhs : v < row.rhs) return false;
    }
    return true;
  };
  auto consider = [&](const std::vector<Rational>& x) {
    if (!feasible(x)) return;
    Rational obj = 0;
    for (int j = 0; j < n; ++j) obj += lp.objective[j] * x[j];
    if (!result.feasible_vertex || obj < result.best_objective) result.best_objective = obj;
    result.feasible_vertex = true;
  };
  // all n-subsets of rows
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  if (m < n) return result;
  for (;;) {
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (int i : idx) {
      a.push_back(lp.rows[i].coeffs);
      b.push_back(lp.rows[i].rhs);
    }
    if (auto x = solve_square(std::move(a), std::move(b))) consider(*x);
    int i = n - 1;
    while (i >= 0 && idx[i] == m - n + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
  return result;
}

// Random LPs with guaranteed vertices when feasible: per-variable lower
// bounds plus one simplex cap, then a few arbitrary rows.
LinearProgram random_lp(std::mt19937_64& gen, int n) {
  auto draw = [&](int lo, int hi) {
    return lo + static_cast<int>(gen() % static_cast<uint64_t>(hi - lo + 1));
  };
  LinearProgram lp(n);
  for (int j = 0; j < n; ++j) lp.objective[j] = draw(-4, 4);
  for (int j = 0; j < n; ++j) {
    std::vector<Rational> row(n, Rational(0));
    row[j] = 1;
    lp.add_ge(std::move(row), Rational(draw(-3, 1)));
  }
  lp.add_ge(std::vector<Rational>(n, Rational(-1)), Rational(-draw(4, 10)));
  int extra = draw(0, std::max(0, 10 - n - 1));
  for (int e = 0; e < extra; ++e) {
    std::vector<Rational> row(n);
    for (int j = 0; j < n; ++j) row[j] = draw(-3, 3);
    bool eq = draw(0, 9) == 0;
    Rational rhs(draw(-6, 3));
    if (eq)
      lp.add_eq(std::move(row), std::move(rhs));
    else
      lp.add_ge(std::move(row), std::move(rhs));
  }
  return lp;
}

}  // namespace

TEST_CASE("single constraint") {
  LinearProgram lp(1);
  lp.objective[0] = 1;
  lp.add_ge({Rational(1)}, Rational(2));
  LpResult r = solve_basic(lp);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.solution->x[0] == 2);
  CHECK(r.solution->objective == 2);
  CHECK(r.solution->tight_rows == std::vector<int>{0});
}

TEST_CASE("two-variable vertex") {
  LinearProgram lp(2);
  lp.objective = {Rational(1), Rational(1)};
  lp.add_ge({Rational(1), Rational(0)}, Rational(0));
  lp.add_ge({Rational(0), Rational(1)}, Rational(0));
  lp.add_ge({Rational(1), Rational(1)}, Rational(1));
  LpResult r = solve_basic(lp);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.solution->objective == 1);
  bool at_10 = r.solution->x == std::vector<Rational>{1, 0};
  bool at_01 = r.solution->x == std::vector<Rational>{0, 1};
  CHECK((at_10 || at_01));
  CHECK(r.solution->tight_rows.size() == 2);
  CHECK(count_tight_independent(*r.solution, lp) == 2);
}

TEST_CASE("contradictory bounds are infeasible") {
  LinearProgram lp(1);
  lp.objective[0] = 1;
  lp.add_ge({Rational(1)}, Rational(1));
  lp.add_ge({Rational(-1)}, Rational(0));
  CHECK(solve_basic(lp).status == LpStatus::Infeasible);
}

TEST_CASE("unbounded ray is reported") {
  LinearProgram lp(1);
  lp.objective[0] = -1;
  lp.add_ge({Rational(1)}, Rational(0));
  CHECK(solve_basic(lp).status == LpStatus::Unbounded);
}

TEST_CASE("equality rows count once in the tight-row rank") {
  LinearProgram lp(2);
  lp.objective = {Rational(1), Rational(1)};
  lp.add_eq({Rational(1), Rational(1)}, Rational(2));
  lp.add_ge({Rational(1), Rational(0)}, Rational(0));
  lp.add_ge({Rational(0), Rational(1)}, Rational(0));
  LpResult r = solve_basic(lp);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.solution->objective == 2);
  CHECK(count_tight_independent(*r.solution, lp) == 2);
}

TEST_CASE("interior point has tight-row rank zero") {
  LinearProgram lp(2);
  lp.add_ge({Rational(1), Rational(0)}, Rational(0));
  lp.add_ge({Rational(0), Rational(1)}, Rational(0));
  BasicSolution interior;
  interior.x = {Rational(1), Rational(1)};
  interior.objective = 0;
  CHECK(count_tight_independent(interior, lp) == 0);
}

TEST_CASE("determinism") {
  std::mt19937_64 gen(7);
  LinearProgram lp = random_lp(gen, 4);
  LpResult a = solve_basic(lp);
  LpResult b = solve_basic(lp);
  REQUIRE(a.status == b.status);
  if (a.status == LpStatus::Optimal) CHECK(a.solution->x == b.solution->x);
}

TEST_CASE("random LPs against exhaustive vertex enumeration") {
  std::mt19937_64 gen(2024);
  int optimal_seen = 0, infeasible_seen = 0;
  for (int iter = 0; iter < 40; ++iter) {
    int n = 1 + static_cast<int>(gen() % 6);
    LinearProgram lp = random_lp(gen, n);
    EnumerationResult oracle = enumerate_vertices(lp);
    LpResult r = solve_basic(lp);
    if (oracle.feasible_vertex) {
      ++optimal_seen;
      REQUIRE(r.status == LpStatus::Optimal);
      CHECK(r.solution->objective == oracle.best_objective);
      // exact feasibility, zero tolerance
      for (const auto& row : lp.rows) {
        Rational v = 0;
        for (int j = 0; j < n; ++j) v += row.coeffs[j] * r.solution->x[j];
        CHECK((row.equality ? v == row.rhs : v >= row.rhs));
      }
      CHECK(count_tight_independent(*r.solution, lp) == n);
    } else {
      ++infeasible_seen;
      CHECK(r.status == LpStatus::Infeasible);
    }
  }
  CHECK(optimal_seen > 0);
  CHECK(infeasible_seen > 0);
}
