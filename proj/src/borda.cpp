#include "shiftbribery/borda.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "detail.hpp"

namespace shiftbribery {

using detail::floor_rational;
using detail::pad_to_units;
using detail::require_borda;
using detail::require_unit_prices;

GapProfile::GapProfile(const Instance& inst) {
  ScoreTable t = positional_scores(inst.election);
  gaps_.reserve(t.scores.size());
  const Rational& sp = t.scores[inst.preferred];
  diffmax_ = 0;
  for (const auto& s : t.scores) {
    Rational g = s - sp;
    if (denominator(g) != 1)
      throw std::invalid_argument("gap profile needs integer positional scores");
    long long gi = numerator(g).convert_to<long long>();
    gaps_.push_back(gi);
    diffmax_ = std::max(diffmax_, gi);
  }
}

long long GapProfile::scrdiff_at(long long k) const {
  long long total = 0;
  for (long long g : gaps_) total += std::max(0LL, g - k);
  return total;
}

std::vector<int> GapProfile::bad_set_above(const Rational& threshold) const {
  std::vector<int> bad;
  for (int c = 0; c < static_cast<int>(gaps_.size()); ++c)
    if (Rational(gaps_[c]) > threshold) bad.push_back(c);
  return bad;
}

std::vector<int> GapProfile::bad_set_above_sqrt(long long k) const {
  std::vector<int> bad;
  for (int c = 0; c < static_cast<int>(gaps_.size()); ++c) {
    long long d = gaps_[c] - k;
    if (d > 0 && d * d > k) bad.push_back(c);  // gap - k > sqrt(k), exactly
  }
  return bad;
}

namespace {

// Sparse layered DP over (residual losses, optionally shift count). States
// are keyed by the mixed-radix encoding of the residual vector; infinite
// entries are simply absent.
struct DpNode {
  Rational cost;
  long long prev_key = -1;
  int shift = 0;
};

DpResult run_dp(const Instance& inst, const std::vector<DpTarget>& targets,
                std::optional<long long> exact_units, long long budget) {
  require_borda(inst, "dp_min_cost");
  const int n = inst.voter_count();
  const int t = static_cast<int>(targets.size());

  double space = 1.0;
  std::vector<long long> stride(t, 1);
  long long full = 0;  // key of the full requirement vector
  {
    long long acc = 1;
    for (int i = 0; i < t; ++i) {
      if (targets[i].required_loss < 0) throw std::invalid_argument("negative required loss");
      for (int j = 0; j < i; ++j)
        if (targets[j].candidate == targets[i].candidate)
          throw std::invalid_argument("dp targets must be distinct");
      stride[i] = acc;
      space *= static_cast<double>(targets[i].required_loss + 1);
      if (space > static_cast<double>(budget))
        throw BudgetExceeded("dp requirement space exceeds the budget");
      full += targets[i].required_loss * acc;
      acc *= targets[i].required_loss + 1;
    }
  }

  long long kdim = exact_units ? *exact_units + 1 : 1;
  auto make_key = [&](long long rkey, long long units) {
    return exact_units ? rkey * kdim + units : rkey;
  };

  // Ordered maps keep tie-breaking among equal-cost states deterministic.
  std::vector<std::map<long long, DpNode>> layers(n + 1);
  layers[0][make_key(full, 0)] = DpNode{Rational(0), -1, 0};

  // passed[z] at shift l: p moves past c_z in this vote iff
  // 0 < rank(p) - rank(c_z) <= l.
  for (int v = 0; v < n; ++v) {
    int rp = inst.election.rank_of(v, inst.preferred);
    std::vector<int> pass_at(t, 0);
    for (int z = 0; z < t; ++z) {
      int d = rp - inst.election.rank_of(v, targets[z].candidate);
      pass_at[z] = d > 0 ? d : inst.max_shift(v) + 1;  // shift needed to pass c_z
    }
    auto& next = layers[v + 1];
    for (const auto& [key, node] : layers[v]) {
      long long rkey = exact_units ? key / kdim : key;
      long long units = exact_units ? key % kdim : 0;
      for (int l = 0; l <= inst.max_shift(v); ++l) {
        if (exact_units && units + l > *exact_units) break;
        ExtRational price = inst.price(v, l);
        if (price.is_infinite()) break;  // nondecreasing: later shifts infinite too
        long long nrkey = rkey;
        for (int z = 0; z < t; ++z) {
          if (l < pass_at[z]) continue;
          long long rem = (rkey / stride[z]) % (targets[z].required_loss + 1);
          if (rem > 0) nrkey -= stride[z];
        }
        long long nkey = make_key(nrkey, units + l);
        Rational ncost = node.cost + price.value();
        auto it = next.find(nkey);
        if (it == next.end() || ncost < it->second.cost)
          next[nkey] = DpNode{std::move(ncost), key, l};
      }
    }
  }

  long long goal_key = exact_units ? make_key(0, *exact_units) : 0;
  auto it = layers[n].find(goal_key);
  if (it == layers[n].end()) return DpResult{};
  const DpNode* goal = &it->second;

  DpResult result;
  result.feasible = true;
  result.cost = goal->cost;
  result.action = ShiftAction::zero(n);
  long long key = goal_key;
  for (int v = n - 1; v >= 0; --v) {
    const DpNode& node = layers[v + 1].at(key);
    result.action.shifts[v] = node.shift;
    key = node.prev_key;
  }
  return result;
}

}  // namespace

DpResult dp_min_cost(const Instance& inst, const std::vector<DpTarget>& targets,
                     long long budget) {
  return run_dp(inst, targets, std::nullopt, budget);
}

DpResult dp_min_cost_exact_shifts(const Instance& inst, const std::vector<DpTarget>& targets,
                                  long long unit_shifts, long long budget) {
  if (unit_shifts < 0) throw std::invalid_argument("negative unit shift count");
  return run_dp(inst, targets, unit_shifts, budget);
}

ShiftAction ptas_unit(const Instance& inst, const Rational& eps) {
  require_borda(inst, "ptas_unit");
  require_unit_prices(inst, "ptas_unit");
  if (eps <= 0) throw std::invalid_argument("eps must be positive");

  GapProfile gp(inst);
  long long dmax = gp.diffmax();
  if (dmax <= 0) return ShiftAction::zero(inst.voter_count());

  for (long long k = (dmax + 1) / 2; k <= dmax; ++k) {
    if (gp.scrdiff_at(k) > k) continue;
    std::vector<DpTarget> targets;
    for (int c : gp.bad_set_above((1 + eps) * Rational(k)))
      targets.push_back(DpTarget{c, gp.gap(c) - k});
    DpResult dp = dp_min_cost(inst, targets);
    if (!dp.feasible || dp.cost > Rational(k)) continue;
    long long goal = floor_rational((1 + eps) * Rational(k));
    return pad_to_units(inst, dp.action, goal);
  }
  throw std::logic_error("ptas_unit: the k = diffmax round cannot fail");
}

FptResult fpt_exact(const Instance& inst) {
  require_borda(inst, "fpt_exact");
  GapProfile gp(inst);
  long long dmax = gp.diffmax();
  FptResult best;
  if (dmax <= 0) {
    best.cost = ExtRational(0);
    best.action = ShiftAction::zero(inst.voter_count());
    return best;
  }
  for (long long k = (dmax + 1) / 2; k <= dmax; ++k) {
    if (gp.scrdiff_at(k) > k) continue;
    std::vector<DpTarget> targets;
    for (int c : gp.bad_set_above(Rational(k)))
      targets.push_back(DpTarget{c, gp.gap(c) - k});
    DpResult dp = dp_min_cost_exact_shifts(inst, targets, k);
    if (dp.feasible && ExtRational(dp.cost) < best.cost) {
      best.cost = ExtRational(dp.cost);
      best.action = dp.action;
    }
  }
  return best;
}

ShiftAction greedy_uniform_aon(const Instance& inst) {
  require_borda(inst, "greedy_uniform_aon");
  for (const auto& pf : inst.prices)
    for (int s = 1; s <= pf.max_shift(); ++s)
      if (pf.at(s) != ExtRational(1))
        throw std::invalid_argument("greedy_uniform_aon requires uniform-all-or-nothing prices");

  const int n = inst.voter_count();
  ShiftAction action = ShiftAction::zero(n);
  Election cur = inst.election;
  for (int round = 0; round <= n; ++round) {
    ScoreTable scores = positional_scores(cur);
    if (scores.scores[inst.preferred] == scores.max_score()) return action;

    int lowest = 0;
    for (int v = 0; v < n; ++v) lowest = std::max(lowest, cur.rank_of(v, inst.preferred));
    int pick = -1;
    if (lowest == 2) {
      // Decrease the current front-runner first.
      for (int v = 0; v < n; ++v) {
        if (cur.rank_of(v, inst.preferred) != lowest) continue;
        if (pick < 0 || scores.scores[cur.candidate_at(v, 1)] > scores.scores[cur.candidate_at(pick, 1)])
          pick = v;
      }
    } else {
      for (int v = 0; v < n; ++v)
        if (cur.rank_of(v, inst.preferred) == lowest) {
          pick = v;
          break;
        }
    }
    ShiftAction bribe = ShiftAction::zero(n);
    bribe.shifts[pick] = cur.rank_of(pick, inst.preferred) - 1;
    cur = apply_shift(cur, inst.preferred, bribe);
    action.shifts[pick] = inst.election.rank_of(pick, inst.preferred) - 1;
  }
  throw std::logic_error("greedy_uniform_aon: p must win once every vote is bribed");
}

}  // namespace shiftbribery
