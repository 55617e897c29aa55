#pragma once

#include <optional>
#include <vector>

#include "shiftbribery/oracle.hpp"
#include "shiftbribery/pricing.hpp"

namespace shiftbribery {

/// Score gaps of an election with integer positional scores (Borda unless
/// explicit integer vectors are given): diffmax, scrdiff and the bad sets
/// that drive the k-loops.
class GapProfile {
 public:
  explicit GapProfile(const Instance& inst);

  /// max_c (scr(c) - scr(p)); at least 0 because c = p participates.
  long long diffmax() const { return diffmax_; }
  /// sum_c max(0, scr(c) - scr(p) - k).
  long long scrdiff_at(long long k) const;
  /// Candidates with scr(c) - scr(p) > threshold.
  std::vector<int> bad_set_above(const Rational& threshold) const;
  /// Candidates with scr(c) - scr(p) > k + sqrt(k), decided exactly.
  std::vector<int> bad_set_above_sqrt(long long k) const;
  long long gap(int candidate) const { return gaps_[candidate]; }

 private:
  std::vector<long long> gaps_;
  long long diffmax_;
};

struct DpTarget {
  int candidate;
  long long required_loss;  // Borda points this candidate must lose
};

struct DpResult {
  bool feasible = false;
  Rational cost;
  ShiftAction action;
};

inline constexpr long long kDefaultDpBudget = 10'000'000;

/// Minimum-cost shift action making every target candidate lose at least
/// its required number of Borda points. Throws BudgetExceeded when
/// prod (s_i + 1) exceeds the budget.
DpResult dp_min_cost(const Instance& inst, const std::vector<DpTarget>& targets,
                     long long budget = kDefaultDpBudget);

/// Same, restricted to actions with exactly `unit_shifts` unit shifts.
DpResult dp_min_cost_exact_shifts(const Instance& inst, const std::vector<DpTarget>& targets,
                                  long long unit_shifts, long long budget = kDefaultDpBudget);

/// Combinatorial PTAS for unit prices: at most floor((1+eps) * opt) unit
/// shifts, always successful.
ShiftAction ptas_unit(const Instance& inst, const Rational& eps);

struct FptResult {
  ExtRational cost = ExtRational::infinity();
  std::optional<ShiftAction> action;  // absent iff no finite-cost success
};

/// Exact optimum for arbitrary prices, 2^O(K) poly(|I|) time where K is the
/// smallest number of unit shifts in an optimal solution.
FptResult fpt_exact(const Instance& inst);

/// Greedy for uniform-all-or-nothing prices: bribes voters ranking p lowest
/// first; cost at most 1.5 * opt + 1.
ShiftAction greedy_uniform_aon(const Instance& inst);

}  // namespace shiftbribery
