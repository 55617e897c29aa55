#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shiftbribery/borda.hpp"
#include "shiftbribery/io.hpp"
#include "shiftbribery/oracle.hpp"
#include "shiftbribery/scoring_ptas.hpp"

using namespace shiftbribery;

namespace {

Instance fixture3_unit() {
  Election e(3, {{0, 1, 2}, {1, 0, 2}});
  return Instance(e, 2, {PriceFunction::unit(2), PriceFunction::unit(2)});
}

Instance winner_instance() {
  Election e(3, {{2, 0, 1}, {2, 1, 0}});
  return Instance(e, 2, {PriceFunction::unit(0), PriceFunction::unit(0)});
}

}  // namespace

TEST_CASE("lp_additive_unit") {
  SUBCASE("p already a winner") {
    CHECK(lp_additive_unit(winner_instance()) == ShiftAction::zero(2));
  }
  SUBCASE("fixture stays within opt + sqrt(opt)") {
    UnitLpStats stats;
    ShiftAction a = lp_additive_unit(fixture3_unit(), &stats);
    CHECK(is_successful(fixture3_unit(), a, Rule::positional()));
    CHECK(a.unit_shifts() <= 3);  // opt = 2, floor(sqrt 2) = 1
    CHECK(stats.nonintegral_voters <= isqrt(stats.terminating_k));
  }
  SUBCASE("additive bound and fractional-voter count on random instances") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
      Instance inst = random_instance(seed, 4, 4, RandomPriceFamily::Unit);
      OracleResult opt = brute_force_opt(inst, Rule::positional());
      REQUIRE(opt.witness);
      long long optimum = opt.min_unit_shifts;
      UnitLpStats stats;
      ShiftAction a = lp_additive_unit(inst, &stats);
      CHECK(is_successful(inst, a, Rule::positional()));
      CHECK(a.unit_shifts() <= optimum + isqrt(optimum));
      CHECK(stats.nonintegral_voters <= isqrt(stats.terminating_k));
      CHECK(Rational(stats.bad_count) <= Rational(isqrt(stats.terminating_k)));
    }
  }
  SUBCASE("rejects non-unit prices") {
    Instance aon(fixture3_unit().election, 2,
                 {PriceFunction::all_or_nothing(2, ExtRational(1)),
                  PriceFunction::all_or_nothing(2, ExtRational(1))});
    CHECK_THROWS_AS(lp_additive_unit(aon), std::invalid_argument);
  }
}

TEST_CASE("eptas_unit") {
  SUBCASE("small diffmax takes the combinatorial branch") {
    // one voter, two candidates, p second: diffmax = 1 < 2/eps^2 for eps = 1
    Election e(2, {{0, 1}});
    Instance inst(e, 1, {PriceFunction::unit(1)});
    EptasResult r = eptas_unit(inst, Rational(1));
    CHECK_FALSE(r.used_lp_branch);
    CHECK(is_successful(inst, r.action, Rule::positional()));
  }
  SUBCASE("branch choice matches the threshold exactly") {
    for (uint64_t seed = 0; seed < 30; ++seed) {
      Instance inst = random_instance(seed, 4, 5, RandomPriceFamily::Unit);
      for (Rational eps : {Rational(1, 4), Rational(1, 2), Rational(2)}) {
        EptasResult r = eptas_unit(inst, eps);
        bool lp_expected = Rational(GapProfile(inst).diffmax()) * eps * eps >= 2;
        CHECK(r.used_lp_branch == lp_expected);
        CHECK(is_successful(inst, r.action, Rule::positional()));
      }
    }
  }
  SUBCASE("ratio bound") {
    for (Rational eps : {Rational(1, 4), Rational(1, 2)}) {
      for (uint64_t seed = 0; seed < 20; ++seed) {
        Instance inst = random_instance(seed, 4, 4, RandomPriceFamily::Unit);
        OracleResult opt = brute_force_opt(inst, Rule::positional());
        EptasResult r = eptas_unit(inst, eps);
        CHECK(Rational(r.action.unit_shifts()) <= (1 + eps) * opt.opt_cost.value());
      }
    }
  }
}

TEST_CASE("lp_additive_general") {
  SUBCASE("p already a winner") {
    auto a = lp_additive_general(winner_instance(), Rational(1, 2));
    REQUIRE(a);
    CHECK(*a == ShiftAction::zero(2));
  }
  SUBCASE("no finite success returns nullopt") {
    Election e(3, {{0, 1, 2}, {1, 0, 2}});
    Instance inst(e, 2,
                  {PriceFunction::all_or_nothing(2, ExtRational::infinity()),
                   PriceFunction::all_or_nothing(2, ExtRational::infinity())});
    CHECK_FALSE(lp_additive_general(inst, Rational(1, 2)));
  }
  SUBCASE("cost bound, C_bad and fractional-voter limits on unit instances") {
    for (Rational eps : {Rational(1, 2), Rational(1)}) {
      for (uint64_t seed = 0; seed < 25; ++seed) {
        Instance inst = random_instance(seed, 4, 4, RandomPriceFamily::Unit);
        OracleResult opt = brute_force_opt(inst, Rule::positional());
        REQUIRE(opt.witness);
        GeneralLpStats stats;
        auto a = lp_additive_general(inst, eps, &stats);
        REQUIRE(a);
        CHECK(is_successful(inst, *a, Rule::positional()));
        CHECK(cost(inst, *a).value() <=
              (1 + eps) * opt.opt_cost.value() + (1 + 1 / eps) * psi_max(inst));
        CHECK(eps * Rational(stats.cbad_count) < 1);
        CHECK(Rational(stats.lp2_nonintegral_voters) < 1 + 1 / eps);
        CHECK(stats.lp1_objective <= opt.opt_cost.value());
      }
    }
  }
  SUBCASE("general prices and per-voter scoring vectors") {
    for (uint64_t seed = 0; seed < 25; ++seed) {
      Instance inst = random_instance(seed, 4, 3, RandomPriceFamily::General, true);
      OracleResult opt = brute_force_opt(inst, Rule::positional());
      GeneralLpStats stats;
      auto a = lp_additive_general(inst, Rational(1, 2), &stats);
      if (!opt.witness) continue;  // fully blocked instances may be LP1-infeasible
      REQUIRE(a);
      CHECK(is_successful(inst, *a, Rule::positional()));
      CHECK(cost(inst, *a).value() <=
            Rational(3, 2) * opt.opt_cost.value() + 3 * psi_max(inst));
      CHECK(stats.lp1_objective <= opt.opt_cost.value());
    }
  }
}

TEST_CASE("ptas_general") {
  SUBCASE("p already a winner") {
    PtasGeneralResult r = ptas_general(winner_instance(), Rational(1));
    REQUIRE(r.action);
    CHECK(*r.action == ShiftAction::zero(2));
    CHECK(r.cost == ExtRational(0));
  }
  SUBCASE("no finite success") {
    Election e(3, {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}});
    Instance inst(e, 2,
                  {PriceFunction::all_or_nothing(2, ExtRational::infinity()),
                   PriceFunction::all_or_nothing(2, ExtRational::infinity()),
                   PriceFunction::all_or_nothing(1, ExtRational::infinity())});
    PtasGeneralResult r = ptas_general(inst, Rational(1));
    CHECK_FALSE(r.action);
    CHECK(r.cost.is_infinite());
  }
  SUBCASE("eps = 1 is a 2-approximation on general instances") {
    for (uint64_t seed = 0; seed < 8; ++seed) {
      Instance inst = random_instance(seed, 3, 3, RandomPriceFamily::General, true);
      OracleResult opt = brute_force_opt(inst, Rule::positional());
      PtasGeneralResult r = ptas_general(inst, Rational(1));
      if (!opt.witness) {
        CHECK_FALSE(r.action);
        continue;
      }
      REQUIRE(r.action);
      CHECK(is_successful(inst, *r.action, Rule::positional()));
      CHECK(r.cost.value() <= 2 * opt.opt_cost.value());
      CHECK(r.max_cbad < 2);               // 1/(eps/2)
      CHECK(r.max_lp2_nonintegral < 3);    // 1 + 2/eps
    }
  }
  SUBCASE("q smaller than n exercises subset guessing") {
    // eps = 2 gives delta = 1/2 and q = 2
    for (uint64_t seed = 20; seed < 26; ++seed) {
      Instance inst = random_instance(seed, 3, 3, RandomPriceFamily::General);
      OracleResult opt = brute_force_opt(inst, Rule::positional());
      PtasGeneralResult r = ptas_general(inst, Rational(2));
      if (!opt.witness) continue;
      REQUIRE(r.action);
      CHECK(cost(inst, *r.action).value() <= 3 * opt.opt_cost.value());
    }
  }
  SUBCASE("branch budget guard") {
    Instance inst = random_instance(3, 4, 5, RandomPriceFamily::General);
    CHECK_THROWS_AS(ptas_general(inst, Rational(1), 5), BudgetExceeded);
  }
}
