#pragma once

#include <string>

#include "shiftbribery/pricing.hpp"

namespace shiftbribery::detail {

inline bool is_borda(const Election& e) {
  if (!e.has_scoring_vectors()) return true;
  for (const auto& w : e.scoring_vectors())
    for (int r = 0; r < e.candidate_count(); ++r)
      if (w[r] != Rational(e.candidate_count() - 1 - r)) return false;
  return true;
}

inline void require_borda(const Instance& inst, const char* who) {
  if (!is_borda(inst.election))
    throw std::invalid_argument(std::string(who) + " requires the Borda rule");
}

inline void require_unit_prices(const Instance& inst, const char* who) {
  for (const auto& pf : inst.prices)
    for (int t = 1; t <= pf.max_shift(); ++t)
      if (pf.at(t) != ExtRational(t))
        throw std::invalid_argument(std::string(who) + " requires unit prices");
}

inline long long floor_rational(const Rational& r) {
  Integer q = numerator(r) / denominator(r);
  if (Rational(q) > r) q -= 1;  // truncation rounds toward zero
  return q.convert_to<long long>();
}

inline long long ceil_rational(const Rational& r) {
  long long f = floor_rational(r);
  return Rational(f) == r ? f : f + 1;
}

/// Pads with unit shifts, voters in index order each pushed as far as
/// allowed, until target_units in total; caps at p-on-top-everywhere.
inline ShiftAction pad_to_units(const Instance& inst, ShiftAction action, long long target_units) {
  long long units = action.unit_shifts();
  for (int v = 0; v < inst.voter_count() && units < target_units; ++v) {
    int room = inst.max_shift(v) - action.shifts[v];
    int add = static_cast<int>(std::min<long long>(room, target_units - units));
    action.shifts[v] += add;
    units += add;
  }
  return action;
}

}  // namespace shiftbribery::detail
