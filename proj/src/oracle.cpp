#include "shiftbribery/oracle.hpp"

#include <vector>

namespace shiftbribery {

namespace {

// Search state with incremental score maintenance. Positional rules keep
// the full score table; Copeland keeps p's pairwise margins plus each
// opponent's fixed score among the other opponents (shifting p never
// changes pairwise outcomes that do not involve p).
struct Search {
  const Instance& inst;
  const Rule& rule;
  int n, m, p;

  std::vector<Rational> scores;  // positional mode

  std::vector<long long> margin_p;      // N(p,c) - N(c,p)
  std::vector<long long> fixed_scaled;  // den*wins + num*ties among opponents
  long long alpha_num = 0, alpha_den = 1;

  ExtRational best = ExtRational::infinity();
  std::optional<ShiftAction> witness;
  long long min_units = -1;
  long long explored = 0;
  std::vector<int> current;

  explicit Search(const Instance& i, const Rule& r)
      : inst(i), rule(r), n(i.voter_count()), m(i.candidate_count()), p(i.preferred) {
    if (rule.is_copeland()) {
      Integer num = numerator(rule.alpha), den = denominator(rule.alpha);
      if (num > 1'000'000 || den > 1'000'000)
        throw std::invalid_argument("oracle: Copeland alpha out of supported range");
      alpha_num = num.convert_to<long long>();
      alpha_den = den.convert_to<long long>();
      auto counts = pairwise_margins(inst.election);
      margin_p.assign(m, 0);
      fixed_scaled.assign(m, 0);
      for (int c = 0; c < m; ++c) {
        if (c == p) continue;
        margin_p[c] = counts[p][c] - counts[c][p];
        long long wins = 0, ties = 0;
        for (int c2 = 0; c2 < m; ++c2) {
          if (c2 == c || c2 == p) continue;
          int d = counts[c][c2] - counts[c2][c];
          if (d > 0)
            ++wins;
          else if (d == 0)
            ++ties;
        }
        fixed_scaled[c] = alpha_den * wins + alpha_num * ties;
      }
    } else {
      scores = positional_scores(inst.election).scores;
    }
    current.assign(n, 0);
  }

  bool leaf_successful() const {
    if (rule.is_copeland()) {
      long long wins_p = 0, ties_p = 0;
      for (int c = 0; c < m; ++c) {
        if (c == p) continue;
        if (margin_p[c] > 0)
          ++wins_p;
        else if (margin_p[c] == 0)
          ++ties_p;
      }
      long long score_p = alpha_den * wins_p + alpha_num * ties_p;
      for (int c = 0; c < m; ++c) {
        if (c == p) continue;
        long long score_c = fixed_scaled[c];
        if (margin_p[c] < 0)
          score_c += alpha_den;
        else if (margin_p[c] == 0)
          score_c += alpha_num;
        if (score_c > score_p) return false;
      }
      return true;
    }
    const Rational& sp = scores[p];
    for (int c = 0; c < m; ++c)
      if (c != p && scores[c] > sp) return false;
    return true;
  }

  // p passes the candidate directly above it when voter v's shift grows by
  // one (s -> s+1); candidate at 1-based rank r-s-1.
  void pass_candidate(int v, int s, int direction) {
    int r = inst.election.rank_of(v, p);
    int c = inst.election.candidate_at(v, r - s - 1);
    if (rule.is_copeland()) {
      margin_p[c] += 2 * direction;
    } else {
      Rational d = inst.election.weight_drop(v, r - s - 1);
      scores[p] += direction * d;
      scores[c] -= direction * d;
    }
  }

  void record_leaf(const Rational& cost_now) {
    ++explored;
    if (!leaf_successful()) return;
    ExtRational cost(cost_now);
    long long units = 0;
    for (int s : current) units += s;
    if (cost < best) {
      best = cost;
      witness = ShiftAction{current};
      min_units = units;
    } else if (cost == best) {
      min_units = std::min(min_units, units);
      // first hit in lexicographic order already stored
    }
  }

  void dfs(int v, const Rational& cost_so_far) {
    if (v == n) {
      record_leaf(cost_so_far);
      return;
    }
    int cap = inst.max_shift(v);
    for (int s = 0; s <= cap; ++s) {
      if (s > 0) pass_candidate(v, s - 1, +1);
      current[v] = s;
      ExtRational price = inst.price(v, s);
      if (price.is_infinite()) continue;  // a finite witness never uses these
      Rational total = cost_so_far + price.value();
      if (best.is_finite() && total > best.value()) continue;
      dfs(v + 1, total);
    }
    for (int s = cap; s > 0; --s) pass_candidate(v, s - 1, -1);
    current[v] = 0;
  }
};

}  // namespace

OracleResult brute_force_opt(const Instance& inst, const Rule& rule, long long budget) {
  // Infinity-priced shifts are pruned on entry, so only the finite prefix
  // of each price function contributes to the search space.
  double space = 1.0;
  for (int v = 0; v < inst.voter_count(); ++v) {
    int options = inst.max_shift(v);
    while (options > 0 && inst.price(v, options).is_infinite()) --options;
    space *= options + 1;
  }
  if (space > static_cast<double>(budget))
    throw BudgetExceeded("shift-action space exceeds the oracle budget");

  Search search(inst, rule);
  search.dfs(0, Rational(0));

  OracleResult result;
  result.opt_cost = search.best;
  result.witness = search.witness;
  result.min_unit_shifts = search.min_units;
  result.explored = search.explored;
  return result;
}

std::optional<long long> brute_force_min_unit_shifts(const Instance& inst, const Rule& rule,
                                                     long long budget) {
  OracleResult r = brute_force_opt(inst, rule, budget);
  if (!r.witness) return std::nullopt;
  return r.min_unit_shifts;
}

}  // namespace shiftbribery
