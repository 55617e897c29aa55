#pragma once

#include <vector>

#include "shiftbribery/election.hpp"
#include "shiftbribery/rational.hpp"

namespace shiftbribery {

/// Cumulative price function of one voter: psi(0) = 0 is implicit, entries
/// hold psi(1..T) where T = pi_v^{-1}(p) - 1. Nondecreasing; once infinite,
/// stays infinite. A voter ranking p first has an empty function.
class PriceFunction {
 public:
  PriceFunction() = default;
  explicit PriceFunction(std::vector<ExtRational> cumulative);

  int max_shift() const { return static_cast<int>(psi_.size()); }
  /// psi(t) for t in 0..T.
  ExtRational at(int t) const;
  /// Delta psi(t) = psi(t) - psi(t-1); infinite when psi(t) is.
  ExtRational step(int t) const;
  const std::vector<ExtRational>& cumulative() const { return psi_; }

  static PriceFunction unit(int max_shift);
  static PriceFunction all_or_nothing(int max_shift, const ExtRational& c);

 private:
  std::vector<ExtRational> psi_;
};

struct Instance {
  Election election;
  int preferred;
  std::vector<PriceFunction> prices;

  Instance(Election e, int preferred, std::vector<PriceFunction> prices);

  int voter_count() const { return election.voter_count(); }
  int candidate_count() const { return election.candidate_count(); }
  /// T_v = pi_v^{-1}(p) - 1, the largest legal shift for voter v.
  int max_shift(int voter) const { return prices[voter].max_shift(); }
  ExtRational price(int voter, int t) const { return prices[voter].at(t); }
};

enum class PriceFamilyKind {
  Unit,
  UniformAllOrNothing,
  OneInfAllOrNothing,
  AllOrNothing,
  General,
};

struct PriceFamily {
  PriceFamilyKind kind = PriceFamilyKind::General;
  // Per-voter flat cost for the all-or-nothing kinds; empty otherwise.
  // Voters that cannot be shifted at all carry a 0 placeholder.
  std::vector<ExtRational> per_voter_cost;
};

const char* to_string(PriceFamilyKind kind);

ExtRational cost(const Instance& inst, const ShiftAction& s);

/// Highest finite price in the instance; psi(0) = 0 always qualifies.
Rational psi_max(const Instance& inst);

/// Width of a (1, inf)-all-or-nothing instance: max shifts purchasable in a
/// single vote at unit cost. Rejects other price families.
int width(const Instance& inst);

/// Most specific matching family, probed in the order
/// Unit, UniformAllOrNothing, OneInfAllOrNothing, AllOrNothing, General.
PriceFamily classify_prices(const Instance& inst);

bool is_successful(const Instance& inst, const ShiftAction& s, const Rule& rule);

}  // namespace shiftbribery
