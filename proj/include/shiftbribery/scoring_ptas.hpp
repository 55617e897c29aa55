#pragma once

#include <optional>

#include "shiftbribery/pricing.hpp"

namespace shiftbribery {

struct UnitLpStats {
  long long terminating_k = -1;
  int nonintegral_voters = 0;  // voters with a fractional value in the basic solution
  int bad_count = 0;
};

/// Borda, unit prices: successful action with at most opt + floor(sqrt(opt))
/// unit shifts. Solves LP-U for a basic solution per candidate-gap round,
/// rounds down and pads.
ShiftAction lp_additive_unit(const Instance& inst, UnitLpStats* stats = nullptr);

struct EptasResult {
  ShiftAction action;
  bool used_lp_branch = false;  // false: combinatorial PTAS branch
};

/// Borda, unit prices: cost at most (1+eps) * opt. Dispatches on
/// diffmax < 2/eps^2 between ptas_unit and lp_additive_unit.
EptasResult eptas_unit(const Instance& inst, const Rational& eps);

struct GeneralLpStats {
  int cbad_count = 0;
  int lp2_nonintegral_voters = 0;
  Rational lp1_objective;  // at most opt(I) whenever opt(I) is finite
};

/// Arbitrary positional scoring vectors and prices: successful action of
/// cost at most (1+eps) * opt + (1 + 1/eps) * psi_max. LP1 for the
/// fractional optimum, y* = min(1, (1+eps) x), targeted LP2 basic solution,
/// rounded up. Returns nullopt when LP1 is infeasible (no finite-cost
/// success exists).
std::optional<ShiftAction> lp_additive_general(const Instance& inst, const Rational& eps,
                                               GeneralLpStats* stats = nullptr);

struct PtasGeneralResult {
  std::optional<ShiftAction> action;  // absent: no branch produced a success
  ExtRational cost = ExtRational::infinity();
  long long branches = 0;
  int max_cbad = 0;
  int max_lp2_nonintegral = 0;
};

inline constexpr long long kDefaultPtasBranchBudget = 5'000'000;

/// The guessing wrapper: delta = eps^2/8, q = ceil(1/delta); enumerates
/// voter subsets of size min(q, n) and their shift vectors, reprices, and
/// runs lp_additive_general with eps/2 on each branch; returns the cheapest
/// successful action measured in the original prices.
PtasGeneralResult ptas_general(const Instance& inst, const Rational& eps,
                               long long branch_budget = kDefaultPtasBranchBudget);

}  // namespace shiftbribery
