#include "shiftbribery/pricing.hpp"

#include <stdexcept>

namespace shiftbribery {

PriceFunction::PriceFunction(std::vector<ExtRational> cumulative) : psi_(std::move(cumulative)) {
  ExtRational prev(0);
  for (const auto& p : psi_) {
    if (p.is_finite() && p.value() < 0)
      throw std::invalid_argument("price function must be nonnegative");
    if (p < prev) throw std::invalid_argument("price function must be nondecreasing");
    prev = p;
  }
}

ExtRational PriceFunction::at(int t) const {
  if (t == 0) return ExtRational(0);
  if (t < 0 || t > max_shift()) throw std::out_of_range("shift outside price function domain");
  return psi_[t - 1];
}

ExtRational PriceFunction::step(int t) const {
  ExtRational cur = at(t);
  if (cur.is_infinite()) return cur;
  return ExtRational(cur.value() - at(t - 1).value());
}

PriceFunction PriceFunction::unit(int max_shift) {
  std::vector<ExtRational> psi;
  psi.reserve(max_shift);
  for (int t = 1; t <= max_shift; ++t) psi.emplace_back(t);
  return PriceFunction(std::move(psi));
}

PriceFunction PriceFunction::all_or_nothing(int max_shift, const ExtRational& c) {
  return PriceFunction(std::vector<ExtRational>(max_shift, c));
}

Instance::Instance(Election e, int preferred_, std::vector<PriceFunction> prices_)
    : election(std::move(e)), preferred(preferred_), prices(std::move(prices_)) {
  if (preferred < 0 || preferred >= election.candidate_count())
    throw std::invalid_argument("preferred candidate out of range");
  if (static_cast<int>(prices.size()) != election.voter_count())
    throw std::invalid_argument("one price function per voter required");
  for (int v = 0; v < election.voter_count(); ++v)
    if (prices[v].max_shift() != election.rank_of(v, preferred) - 1)
      throw std::invalid_argument("voter " + std::to_string(v) +
                                  ": price function domain must be pi^-1(p) - 1");
}

const char* to_string(PriceFamilyKind kind) {
  switch (kind) {
    case PriceFamilyKind::Unit: return "unit";
    case PriceFamilyKind::UniformAllOrNothing: return "uniform-aon";
    case PriceFamilyKind::OneInfAllOrNothing: return "one-inf-aon";
    case PriceFamilyKind::AllOrNothing: return "aon";
    case PriceFamilyKind::General: return "general";
  }
  return "general";
}

ExtRational cost(const Instance& inst, const ShiftAction& s) {
  check_shift_action(inst.election, inst.preferred, s);
  ExtRational total(0);
  for (int v = 0; v < inst.voter_count(); ++v) {
    total += inst.price(v, s.shifts[v]);
    if (total.is_infinite()) return total;
  }
  return total;
}

Rational psi_max(const Instance& inst) {
  Rational best(0);
  for (const auto& pf : inst.prices)
    for (const auto& p : pf.cumulative())
      if (p.is_finite() && p.value() > best) best = p.value();
  return best;
}

namespace {

bool is_unit(const Instance& inst) {
  for (const auto& pf : inst.prices)
    for (int t = 1; t <= pf.max_shift(); ++t)
      if (pf.at(t) != ExtRational(t)) return false;
  return true;
}

// Flat per-voter cost when every positive shift has the same price.
bool flat_cost(const PriceFunction& pf, ExtRational& c) {
  if (pf.max_shift() == 0) {
    c = ExtRational(0);
    return true;
  }
  c = pf.at(1);
  for (int t = 2; t <= pf.max_shift(); ++t)
    if (pf.at(t) != c) return false;
  return true;
}

}  // namespace

PriceFamily classify_prices(const Instance& inst) {
  PriceFamily family;
  if (is_unit(inst)) {
    family.kind = PriceFamilyKind::Unit;
    return family;
  }
  std::vector<ExtRational> costs(inst.voter_count());
  bool aon = true;
  for (int v = 0; v < inst.voter_count() && aon; ++v)
    aon = flat_cost(inst.prices[v], costs[v]);
  if (!aon) {
    family.kind = PriceFamilyKind::General;
    return family;
  }
  bool uniform = true, one_inf = true;
  for (int v = 0; v < inst.voter_count(); ++v) {
    if (inst.prices[v].max_shift() == 0) continue;  // no constraint from unshiftable voters
    if (costs[v] != ExtRational(1)) uniform = false;
    if (costs[v] != ExtRational(1) && !costs[v].is_infinite()) one_inf = false;
  }
  family.per_voter_cost = std::move(costs);
  if (uniform)
    family.kind = PriceFamilyKind::UniformAllOrNothing;
  else if (one_inf)
    family.kind = PriceFamilyKind::OneInfAllOrNothing;
  else
    family.kind = PriceFamilyKind::AllOrNothing;
  return family;
}

int width(const Instance& inst) {
  // Checked directly rather than via the classifier: a unit-priced instance
  // whose voters allow at most one shift is still (1, inf)-all-or-nothing.
  int w = 0;
  for (int v = 0; v < inst.voter_count(); ++v) {
    if (inst.max_shift(v) == 0) continue;
    ExtRational c;
    if (!flat_cost(inst.prices[v], c) || (c != ExtRational(1) && !c.is_infinite()))
      throw std::invalid_argument("width is defined for (1, inf)-all-or-nothing instances");
    if (c == ExtRational(1)) w = std::max(w, inst.max_shift(v));
  }
  return w;
}

bool is_successful(const Instance& inst, const ShiftAction& s, const Rule& rule) {
  Election shifted = apply_shift(inst.election, inst.preferred, s);
  return is_winner(shifted, inst.preferred, rule);
}

}  // namespace shiftbribery
