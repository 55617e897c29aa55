#include "shiftbribery/scoring_ptas.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "detail.hpp"
#include "shiftbribery/borda.hpp"
#include "shiftbribery/lp.hpp"

namespace shiftbribery {

using detail::ceil_rational;
using detail::floor_rational;
using detail::pad_to_units;
using detail::require_borda;
using detail::require_unit_prices;

namespace {

// Variable layout for the per-(voter, rank) shift matrices. Ranks outside
// the free window are pinned constants: below the cheapest reachable rank
// (infinite cumulative price) to 0, at and above the pin rank to 1.
// Substituting the constants out keeps the solver small and is equivalent
// to carrying them as equality rows.
struct ShiftVars {
  int m = 0;
  std::vector<int> lo, hi;               // free window [lo_v, hi_v], 1-based ranks
  std::vector<std::vector<int>> var;     // var[v][j-1] or -1
  int num_vars = 0;

  // pin_rank_v: smallest rank pinned to one (LP1: pi^-1(p); LP2: j_v).
  ShiftVars(const Instance& inst, const std::vector<int>& pin_rank) {
    int n = inst.voter_count();
    m = inst.candidate_count();
    lo.assign(n, 1);
    hi.assign(n, 0);
    var.assign(n, std::vector<int>(m, -1));
    for (int v = 0; v < n; ++v) {
      int rp = inst.election.rank_of(v, inst.preferred);
      int max_finite = inst.max_shift(v);
      while (max_finite > 0 && inst.price(v, max_finite).is_infinite()) --max_finite;
      lo[v] = rp - max_finite;  // cheapest reachable rank
      hi[v] = pin_rank[v] - 1;
      for (int j = lo[v]; j <= hi[v]; ++j) var[v][j - 1] = num_vars++;
    }
  }

  // Value of x_(v,j) under solution values for the free window.
  Rational value(const std::vector<Rational>& x, int v, int j) const {
    if (j < lo[v]) return Rational(0);
    if (j > hi[v]) return Rational(1);
    return x[var[v][j - 1]];
  }
};

// All-pinned grids still need one placeholder variable for the solver;
// pinning it keeps the region a polytope.
LinearProgram make_grid_lp(const ShiftVars& vars) {
  LinearProgram lp(std::max(vars.num_vars, 1));
  if (vars.num_vars == 0) lp.add_eq({Rational(1)}, Rational(0));
  return lp;
}

void add_chain_rows(LinearProgram& lp, const ShiftVars& vars) {
  for (size_t v = 0; v < vars.lo.size(); ++v) {
    if (vars.lo[v] > vars.hi[v]) continue;
    std::vector<Rational> row(lp.num_vars, Rational(0));
    row[vars.var[v][vars.lo[v] - 1]] = 1;
    lp.add_ge(row, Rational(0));
    for (int j = vars.lo[v] + 1; j <= vars.hi[v]; ++j) {
      std::vector<Rational> diff(lp.num_vars, Rational(0));
      diff[vars.var[v][j - 1]] = 1;
      diff[vars.var[v][j - 2]] = -1;
      lp.add_ge(diff, Rational(0));
    }
    std::vector<Rational> cap(lp.num_vars, Rational(0));
    cap[vars.var[v][vars.hi[v] - 1]] = -1;
    lp.add_ge(cap, Rational(-1));
  }
}

// Score row for candidate c:
//   sum_v sum_j dw^v_j x_(v,j)  +  sum_{v: c above p} dw^v_{rank(c)} x_(v,rank(c))
//     >= scr(c) - scr(p)
// with pinned variables folded into the right-hand side.
void add_score_row(LinearProgram& lp, const Instance& inst, const ShiftVars& vars, int c,
                   const Rational& gap) {
  std::vector<Rational> row(lp.num_vars, Rational(0));
  Rational rhs = gap;
  auto add_term = [&](int v, int j, const Rational& coeff) {
    if (coeff == 0) return;
    int idx = vars.var[v][j - 1];
    if (idx >= 0)
      row[idx] += coeff;
    else if (j > vars.hi[v])
      rhs -= coeff;  // pinned to one
  };
  for (int v = 0; v < inst.voter_count(); ++v) {
    int rp = inst.election.rank_of(v, inst.preferred);
    for (int j = 1; j <= rp - 1; ++j) add_term(v, j, inst.election.weight_drop(v, j));
    int rc = inst.election.rank_of(v, c);
    if (rc < rp) add_term(v, rc, inst.election.weight_drop(v, rc));
  }
  lp.add_ge(std::move(row), rhs);
}

std::vector<Rational> lp_objective(const Instance& inst, const ShiftVars& vars, int num_vars) {
  std::vector<Rational> obj(num_vars, Rational(0));
  for (int v = 0; v < inst.voter_count(); ++v) {
    int rp = inst.election.rank_of(v, inst.preferred);
    for (int j = vars.lo[v]; j <= vars.hi[v] && j <= rp - 1; ++j)
      obj[vars.var[v][j - 1]] = inst.prices[v].step(rp - j).value();
  }
  return obj;
}

int count_nonintegral_voters(const ShiftVars& vars, const std::vector<Rational>& x) {
  int count = 0;
  for (size_t v = 0; v < vars.lo.size(); ++v)
    for (int j = vars.lo[v]; j <= vars.hi[v]; ++j) {
      const Rational& val = x[vars.var[v][j - 1]];
      if (val != 0 && val != 1) {
        ++count;
        break;
      }
    }
  return count;
}

}  // namespace

ShiftAction lp_additive_unit(const Instance& inst, UnitLpStats* stats) {
  require_borda(inst, "lp_additive_unit");
  require_unit_prices(inst, "lp_additive_unit");

  GapProfile gp(inst);
  long long dmax = gp.diffmax();
  if (dmax <= 0) {
    if (stats) *stats = UnitLpStats{0, 0, 0};
    return ShiftAction::zero(inst.voter_count());
  }

  std::vector<int> pin_rank(inst.voter_count());
  for (int v = 0; v < inst.voter_count(); ++v)
    pin_rank[v] = inst.election.rank_of(v, inst.preferred);

  for (long long k = (dmax + 1) / 2; k <= dmax; ++k) {
    if (gp.scrdiff_at(k) > k) continue;
    std::vector<int> bad = gp.bad_set_above_sqrt(k);
    if (static_cast<long long>(bad.size()) > isqrt(k))
      throw std::logic_error("lp_additive_unit: more than sqrt(k) bad candidates");

    ShiftVars vars(inst, pin_rank);
    LinearProgram lp = make_grid_lp(vars);
    for (int j = 0; j < vars.num_vars; ++j) lp.objective[j] = 1;
    add_chain_rows(lp, vars);
    for (int c : bad) {
      std::vector<Rational> row(lp.num_vars, Rational(0));
      for (int v = 0; v < inst.voter_count(); ++v) {
        int rc = inst.election.rank_of(v, c);
        if (rc < inst.election.rank_of(v, inst.preferred)) row[vars.var[v][rc - 1]] += 1;
      }
      lp.add_ge(std::move(row), Rational(gp.gap(c) - k));
    }

    LpResult res = solve_basic(lp);
    if (res.status != LpStatus::Optimal) continue;
    if (res.solution->objective > Rational(k)) continue;

    int nonintegral = count_nonintegral_voters(vars, res.solution->x);
    if (nonintegral > isqrt(k))
      throw std::logic_error("lp_additive_unit: basic solution has too many fractional voters");

    ShiftAction action = ShiftAction::zero(inst.voter_count());
    for (int v = 0; v < inst.voter_count(); ++v)
      for (int j = vars.lo[v]; j <= vars.hi[v]; ++j)
        if (res.solution->x[vars.var[v][j - 1]] == 1) ++action.shifts[v];  // floor
    action = pad_to_units(inst, std::move(action), k + isqrt(k));
    if (!is_successful(inst, action, Rule::positional()))
      throw std::logic_error("lp_additive_unit produced an unsuccessful action");
    if (stats) *stats = UnitLpStats{k, nonintegral, static_cast<int>(bad.size())};
    return action;
  }
  throw std::logic_error("lp_additive_unit: the k = diffmax round cannot fail");
}

EptasResult eptas_unit(const Instance& inst, const Rational& eps) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  GapProfile gp(inst);
  if (Rational(gp.diffmax()) * eps * eps < 2)
    return EptasResult{ptas_unit(inst, eps), false};
  return EptasResult{lp_additive_unit(inst), true};
}

std::optional<ShiftAction> lp_additive_general(const Instance& inst, const Rational& eps,
                                               GeneralLpStats* stats) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  const Election& e = inst.election;
  const int n = inst.voter_count();
  const int m = inst.candidate_count();
  const int p = inst.preferred;
  ScoreTable scores = positional_scores(e);

  // LP1: full shift windows, pinned to one from p's current rank on.
  std::vector<int> pin1(n);
  for (int v = 0; v < n; ++v) pin1[v] = e.rank_of(v, p);
  ShiftVars vars1(inst, pin1);
  LinearProgram lp1 = make_grid_lp(vars1);
  lp1.objective = lp_objective(inst, vars1, lp1.num_vars);
  add_chain_rows(lp1, vars1);
  for (int c = 0; c < m; ++c)
    if (c != p) add_score_row(lp1, inst, vars1, c, scores.scores[c] - scores.scores[p]);

  LpResult r1 = solve_basic(lp1);
  if (r1.status != LpStatus::Optimal) return std::nullopt;  // no finite-cost success
  const std::vector<Rational>& x = r1.solution->x;

  // y* = min(1, (1+eps) x); j_v = first rank where y* reaches one.
  std::vector<int> jv(n);
  std::vector<std::vector<Rational>> ystar(n, std::vector<Rational>(m));
  for (int v = 0; v < n; ++v) {
    jv[v] = -1;
    for (int j = 1; j <= m; ++j) {
      Rational y = (1 + eps) * vars1.value(x, v, j);
      if (y > 1) y = 1;
      ystar[v][j - 1] = y;
      if (jv[v] < 0 && y == 1) jv[v] = j;
    }
    if (jv[v] < 0) throw std::logic_error("y* must reach one by p's own rank");
  }

  // p's fractional score gain under y*.
  Rational gain(0);
  for (int v = 0; v < n; ++v)
    for (int j = 1; j <= e.rank_of(v, p) - 1; ++j)
      gain += e.weight_drop(v, j) * ystar[v][j - 1];

  // C_bad: candidates still ahead after the integral part of y*.
  std::vector<int> cbad;
  for (int c = 0; c < m; ++c) {
    if (c == p) continue;
    Rational lhs = scores.scores[c];
    for (int v = 0; v < n; ++v) {
      int rc = e.rank_of(v, c);
      if (rc < e.rank_of(v, p) && rc >= jv[v]) lhs -= e.weight_drop(v, rc);
    }
    if (lhs > scores.scores[p] + gain) cbad.push_back(c);
  }
  if (eps * Rational(static_cast<long long>(cbad.size())) >= 1)
    throw std::logic_error("lp_additive_general: |C_bad| must stay below 1/eps");

  // LP2 over the windows below j_v.
  ShiftVars vars2(inst, jv);
  LinearProgram lp2 = make_grid_lp(vars2);
  lp2.objective = lp_objective(inst, vars2, lp2.num_vars);
  add_chain_rows(lp2, vars2);
  for (int c : cbad) add_score_row(lp2, inst, vars2, c, scores.scores[c] - scores.scores[p]);
  {
    // Constraint (9): p gains at least its y* score, with the exact y*
    // rationals on the right-hand side.
    std::vector<Rational> row(lp2.num_vars, Rational(0));
    Rational rhs = gain;
    for (int v = 0; v < n; ++v) {
      for (int j = 1; j <= e.rank_of(v, p) - 1; ++j) {
        Rational dw = e.weight_drop(v, j);
        if (dw == 0) continue;
        int idx = vars2.var[v][j - 1];
        if (idx >= 0)
          row[idx] += dw;
        else if (j > vars2.hi[v])
          rhs -= dw;
      }
    }
    lp2.add_ge(std::move(row), rhs);
  }

  LpResult r2 = solve_basic(lp2);
  if (r2.status != LpStatus::Optimal)
    throw std::logic_error("LP2 must be feasible: y* itself is a solution");
  const std::vector<Rational>& y = r2.solution->x;

  int nonintegral = count_nonintegral_voters(vars2, y);
  if (Rational(nonintegral) >= 1 + 1 / eps)
    throw std::logic_error("lp_additive_general: too many fractional voters in LP2");

  ShiftAction action = ShiftAction::zero(n);
  for (int v = 0; v < n; ++v) {
    int rp = e.rank_of(v, p);
    Rational prev(-1);
    for (int j = 1; j <= rp - 1; ++j) {
      Rational val = vars2.value(y, v, j);
      if (val < prev) throw std::logic_error("LP2 solution must be monotone per voter");
      prev = val;
      if (val > 0) ++action.shifts[v];  // ceil
    }
  }
  if (!is_successful(inst, action, Rule::positional()))
    throw std::logic_error("lp_additive_general produced an unsuccessful action");
  if (stats)
    *stats = GeneralLpStats{static_cast<int>(cbad.size()), nonintegral, r1.solution->objective};
  return action;
}

PtasGeneralResult ptas_general(const Instance& inst, const Rational& eps,
                               long long branch_budget) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  PtasGeneralResult result;
  if (is_winner(inst.election, inst.preferred, Rule::positional())) {
    result.action = ShiftAction::zero(inst.voter_count());
    result.cost = ExtRational(0);
    return result;
  }

  const int n = inst.voter_count();
  const int m = inst.candidate_count();
  Rational delta = eps * eps / 8;
  int q = static_cast<int>(std::min<long long>(ceil_rational(1 / delta), n));
  Rational half_eps = eps / 2;

  std::vector<int> subset(q);
  for (int i = 0; i < q; ++i) subset[i] = i;
  auto next_subset = [&]() {
    int i = q - 1;
    while (i >= 0 && subset[i] == n - q + i) --i;
    if (i < 0) return false;
    ++subset[i];
    for (int j = i + 1; j < q; ++j) subset[j] = subset[j - 1] + 1;
    return true;
  };

  do {
    // Shift guesses over the subset, clamped to the legal range; clamping
    // collapses duplicates, which are solved once.
    std::set<std::vector<int>> seen;
    std::vector<int> raw(q, 0);
    for (;;) {
      std::vector<int> guess(q);
      for (int i = 0; i < q; ++i)
        guess[i] = std::min(raw[i], inst.max_shift(subset[i]));
      if (seen.insert(guess).second) {
        if (++result.branches > branch_budget)
          throw BudgetExceeded("ptas_general branch budget exhausted");

        ExtRational b = ExtRational::infinity();
        for (int i = 0; i < q; ++i) b = std::min(b, inst.price(subset[i], guess[i]));

        std::vector<PriceFunction> reprice;
        reprice.reserve(n);
        std::vector<int> guessed(n, -1);
        for (int i = 0; i < q; ++i) guessed[subset[i]] = guess[i];
        for (int v = 0; v < n; ++v) {
          std::vector<ExtRational> psi(inst.max_shift(v));
          for (int t = 1; t <= inst.max_shift(v); ++t) {
            if (guessed[v] >= 0)
              psi[t - 1] = t <= guessed[v] ? ExtRational(0) : ExtRational::infinity();
            else
              psi[t - 1] = inst.price(v, t) <= b ? inst.price(v, t) : ExtRational::infinity();
          }
          reprice.emplace_back(std::move(psi));
        }

        GeneralLpStats stats;
        auto act = lp_additive_general(Instance(inst.election, inst.preferred, std::move(reprice)),
                                       half_eps, &stats);
        if (act) {
          result.max_cbad = std::max(result.max_cbad, stats.cbad_count);
          result.max_lp2_nonintegral = std::max(result.max_lp2_nonintegral, stats.lp2_nonintegral_voters);
          if (is_successful(inst, *act, Rule::positional())) {
            ExtRational c = cost(inst, *act);
            if (c < result.cost) {
              result.cost = c;
              result.action = *act;
            }
          }
        }
      }
      int i = q - 1;
      while (i >= 0 && raw[i] == m) raw[i--] = 0;
      if (i < 0) break;
      ++raw[i];
    }
  } while (next_subset());

  return result;
}

}  // namespace shiftbribery
