#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shiftbribery/io.hpp"
#include "shiftbribery/oracle.hpp"

using namespace shiftbribery;

namespace {

Instance fixture3_unit() {
  Election e(3, {{0, 1, 2}, {1, 0, 2}});
  return Instance(e, 2, {PriceFunction::unit(2), PriceFunction::unit(2)});
}

// Reference optimum computed the slow, obvious way through the public API;
// checks the oracle's incremental bookkeeping.
ExtRational naive_opt(const Instance& inst, const Rule& rule) {
  int n = inst.voter_count();
  std::vector<int> s(n, 0);
  ExtRational best = ExtRational::infinity();
  for (;;) {
    ShiftAction action{s};
    ExtRational c = cost(inst, action);
    if (c.is_finite() && c < best && is_successful(inst, action, rule)) best = c;
    int v = n - 1;
    while (v >= 0 && s[v] == inst.max_shift(v)) s[v--] = 0;
    if (v < 0) break;
    ++s[v];
  }
  return best;
}

}  // namespace

TEST_CASE("p already winning costs nothing") {
  Election e(2, {{1, 0}, {1, 0}, {0, 1}});
  Instance inst(e, 1,
                {PriceFunction::unit(0), PriceFunction::unit(0), PriceFunction::unit(1)});
  OracleResult r = brute_force_opt(inst, Rule::positional());
  CHECK(r.opt_cost == ExtRational(0));
  CHECK(r.witness == ShiftAction::zero(3));
  CHECK(r.min_unit_shifts == 0);
}

TEST_CASE("3-candidate fixture has optimum 2") {
  OracleResult r = brute_force_opt(fixture3_unit(), Rule::positional());
  CHECK(r.opt_cost == ExtRational(2));
  REQUIRE(r.witness);
  CHECK(is_successful(fixture3_unit(), *r.witness, Rule::positional()));
  // lexicographically smallest optimum ties the scores through voter 1
  CHECK(*r.witness == ShiftAction{{0, 2}});
  CHECK(r.min_unit_shifts == 2);
  CHECK(r.explored == 6);  // 9 actions, 3 pruned once the incumbent is 2
}

TEST_CASE("no finite success leaves the witness empty") {
  Election e(3, {{0, 1, 2}, {1, 0, 2}});
  Instance inst(e, 2,
                {PriceFunction::all_or_nothing(2, ExtRational::infinity()),
                 PriceFunction::all_or_nothing(2, ExtRational::infinity())});
  OracleResult r = brute_force_opt(inst, Rule::positional());
  CHECK(r.opt_cost.is_infinite());
  CHECK_FALSE(r.witness);
  CHECK(brute_force_min_unit_shifts(inst, Rule::positional()) == std::nullopt);
}

TEST_CASE("budget guard") {
  Instance inst = random_instance(1, 5, 5, RandomPriceFamily::Unit);
  CHECK_THROWS_AS(brute_force_opt(inst, Rule::positional(), 10), BudgetExceeded);
}

TEST_CASE("min unit shifts and the diffmax sandwich") {
  Instance inst = fixture3_unit();
  auto k = brute_force_min_unit_shifts(inst, Rule::positional());
  REQUIRE(k);
  CHECK(*k == 2);  // diffmax = 3: 1.5 <= 2 <= 3

  for (uint64_t seed = 0; seed < 60; ++seed) {
    Instance r = random_instance(seed, 4, 4, RandomPriceFamily::General);
    OracleResult res = brute_force_opt(r, Rule::positional());
    if (!res.witness) continue;
    ScoreTable t = positional_scores(r.election);
    Rational diffmax = t.max_score() - t.scores[r.preferred];
    CHECK(Rational(2 * res.min_unit_shifts) >= diffmax);
    CHECK(Rational(res.min_unit_shifts) <= diffmax);
  }
}

TEST_CASE("witnesses are successful and match the naive search") {
  for (auto family : {RandomPriceFamily::Unit, RandomPriceFamily::UniformAon,
                      RandomPriceFamily::OneInfAon, RandomPriceFamily::General}) {
    for (uint64_t seed = 0; seed < 25; ++seed) {
      Instance inst = random_instance(seed, 4, 3, family);
      for (Rule rule : {Rule::positional(), Rule::copeland(Rational(1, 2))}) {
        OracleResult r = brute_force_opt(inst, rule);
        CHECK(r.opt_cost == naive_opt(inst, rule));
        if (r.witness) {
          CHECK(is_successful(inst, *r.witness, rule));
          CHECK(cost(inst, *r.witness) == r.opt_cost);
        }
      }
    }
  }
}

TEST_CASE("relaxing a price never raises the optimum") {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    Instance inst = random_instance(seed, 4, 3, RandomPriceFamily::General);
    ExtRational before = brute_force_opt(inst, Rule::positional()).opt_cost;
    // halve one voter's full price function (pointwise decrease)
    for (int v = 0; v < 3; ++v) {
      if (inst.max_shift(v) == 0) continue;
      std::vector<ExtRational> psi;
      for (int t = 1; t <= inst.max_shift(v); ++t)
        psi.push_back(inst.price(v, t).is_infinite()
                          ? ExtRational::infinity()
                          : ExtRational(inst.price(v, t).value() / 2));
      auto prices = inst.prices;
      prices[v] = PriceFunction(psi);
      Instance relaxed(inst.election, inst.preferred, prices);
      CHECK(brute_force_opt(relaxed, Rule::positional()).opt_cost <= before);
      break;
    }
  }
}
