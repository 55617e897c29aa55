#pragma once

#include <optional>
#include <stdexcept>

#include "shiftbribery/pricing.hpp"

namespace shiftbribery {

inline constexpr long long kDefaultOracleBudget = 10'000'000;

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  ExtRational opt_cost = ExtRational::infinity();
  /// Lexicographically smallest minimum-cost successful action; absent iff
  /// no successful action of finite cost exists.
  std::optional<ShiftAction> witness;
  /// Fewest unit shifts over all successful actions of cost opt_cost.
  long long min_unit_shifts = -1;
  long long explored = 0;
};

/// Exhaustive search over all shift actions (voters in index order, shift
/// values ascending), pruning branches whose partial cost already exceeds
/// the best found and branches priced at infinity. Throws BudgetExceeded
/// when prod_v pi_v^{-1}(p) is larger than the budget.
OracleResult brute_force_opt(const Instance& inst, const Rule& rule,
                             long long budget = kDefaultOracleBudget);

/// Smallest number of unit shifts among minimum-cost successful actions;
/// nullopt when no finite-cost success exists.
std::optional<long long> brute_force_min_unit_shifts(const Instance& inst, const Rule& rule,
                                                     long long budget = kDefaultOracleBudget);

}  // namespace shiftbribery
