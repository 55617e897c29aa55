#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "shiftbribery/hardness.hpp"
#include "shiftbribery/io.hpp"
#include "shiftbribery/oracle.hpp"

using namespace shiftbribery;

namespace {

const Rational kHalf(1, 2);

long long brute_force_set_cover(const SetCoverInstance& sc) {
  int m = static_cast<int>(sc.sets.size());
  long long best = -1;
  for (int mask = 0; mask < (1 << m); ++mask) {
    std::vector<bool> hit(sc.universe_size, false);
    for (int i = 0; i < m; ++i)
      if (mask & (1 << i))
        for (int e : sc.sets[i]) hit[e] = true;
    if (std::find(hit.begin(), hit.end(), false) == hit.end()) {
      long long size = __builtin_popcount(mask);
      if (best < 0 || size < best) best = size;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("half_split_orders") {
  SUBCASE("singleton") {
    auto [hso, hst] = half_split_orders({7}, 7);
    CHECK(hso == std::vector<int>{7});
    CHECK(hst == std::vector<int>{7});
  }
  SUBCASE("three candidates, first") {
    auto [hso, hst] = half_split_orders({0, 1, 2}, 0);
    CHECK(hso == std::vector<int>{0, 1, 2});
    CHECK(hst == std::vector<int>{2, 0, 1});
    Election pair(3, {hso, hst});
    auto n = pairwise_margins(pair);
    CHECK(n[0][1] == 2);  // c beats its half strictly
    CHECK(n[0][2] == 1);  // ties with the rest
    CHECK(n[1][2] == 1);  // pairs without c tie
  }
  SUBCASE("margins for every candidate of a 5-set") {
    std::vector<int> order{0, 1, 2, 3, 4};
    for (int c : order) {
      auto [hso, hst] = half_split_orders(order, c);
      Election pair(5, {hso, hst});
      auto n = pairwise_margins(pair);
      int beaten = 0;
      for (int other : order) {
        if (other == c) continue;
        if (n[c][other] == 2) ++beaten;
        else CHECK(n[c][other] == 1);
        int third = -1;
        for (int x : order)
          if (x != c && x != other) third = x;
        CHECK(n[other][third] + n[third][other] == 2);
      }
      CHECK(beaten == 2);
    }
  }
  SUBCASE("rejects even sizes") {
    CHECK_THROWS_AS(half_split_orders({0, 1}, 0), std::invalid_argument);
  }
}

TEST_CASE("dummy_election satisfies the four filler properties") {
  for (int total : {3, 5, 7}) {
    for (int asize = 1; asize < total; ++asize) {
      int bsize = total - asize;
      for (int a = 0; a <= bsize; ++a) {
        for (int b = 0; b <= 2; ++b) {
          std::vector<int> A(asize), B(bsize);
          std::iota(A.begin(), A.end(), 0);
          std::iota(B.begin(), B.end(), asize);
          int p = total, d = total + 1;
          Election e = dummy_election(A, B, p, d, a, b);
          CHECK(e.voter_count() == 2 * asize + 2 * bsize + 2 * b + 5);

          auto margins = pairwise_margins(e);
          for (int c : A) CHECK(margins[c][p] - margins[p][c] == 2 * b + 1);

          ScoreTable scores = copeland_scores(e, kHalf);
          CHECK(scores.scores[p] == bsize - a + 1);
          CHECK(scores.scores[d] == bsize);
          for (int c = 0; c < total; ++c)
            CHECK(scores.scores[c] <= Rational(total + 3, 2));
        }
      }
    }
  }
}

TEST_CASE("reduce_dks_aon on K4") {
  Graph k4 = Graph::complete(4);
  ReductionOutput out = reduce_dks_aon(k4, 3, 3, kHalf);
  const Instance& inst = out.instance;

  SUBCASE("shape and prices") {
    int ne = 6, nd = 11;
    CHECK(inst.candidate_count() == ne + nd + 2);
    CHECK(inst.voter_count() % 2 == 1);  // no pairwise ties possible
    CHECK(classify_prices(inst).kind == PriceFamilyKind::OneInfAllOrNothing);
    CHECK(width(inst) == 3);  // max degree of K4
  }
  SUBCASE("p starts |D| - t behind and d leads") {
    ScoreTable scores = copeland_scores(inst.election, kHalf);
    int p = inst.preferred, d = p + 1;
    CHECK(scores.scores[p] == 11 - 3);
    CHECK(scores.scores[d] == 11);
    CHECK(scores.scores[d] == scores.max_score());
    auto margins = pairwise_margins(inst.election);
    for (int e = 0; e < 6; ++e) CHECK(margins[e][p] - margins[p][e] == 3);
  }
  SUBCASE("planted triangle gives a successful cost-3 witness") {
    REQUIRE(out.witness);
    CHECK(out.witness->claimed_cost_bound == ExtRational(3));
    CHECK(cost(inst, out.witness->action) == ExtRational(3));
    CHECK(is_successful(inst, out.witness->action, out.rule));
  }
  SUBCASE("no witness when the target is unreachable") {
    // a path on 3 vertices has no 2-vertex subgraph with 2 edges
    Graph path(3, {{0, 1}, {1, 2}});
    CHECK_FALSE(reduce_dks_aon(path, 2, 2, kHalf).witness);
  }
}

TEST_CASE("aon_to_unit") {
  Election e(4, {{0, 1, 2, 3}, {3, 1, 0, 2}, {1, 0, 3, 2}});
  Instance aon(e, 3,
               {PriceFunction::all_or_nothing(3, ExtRational(1)),
                PriceFunction::all_or_nothing(0, ExtRational(1)),
                PriceFunction::all_or_nothing(2, ExtRational::infinity())});
  AonToUnitResult unit = aon_to_unit(aon, 2, 10);

  SUBCASE("shape") {
    CHECK(unit.instance.candidate_count() == 4 + 12 * 3);
    CHECK(unit.instance.voter_count() == 3);
    CHECK(unit.block_sizes == std::vector<int>{2, 10, 10});
    CHECK(classify_prices(unit.instance).kind == PriceFamilyKind::Unit);
    // p sits right below its filler block
    CHECK(unit.instance.election.rank_of(0, 3) == 4 + 2);
  }
  SUBCASE("fillers lose every pairwise election against originals") {
    auto margins = pairwise_margins(unit.instance.election);
    for (int f = 4; f < unit.instance.candidate_count(); ++f)
      for (int c = 0; c < 4; ++c) CHECK(margins[f][c] < margins[c][f]);
  }
  SUBCASE("lifting a successful action keeps it successful") {
    Rule rule = Rule::copeland(kHalf);
    OracleResult opt = brute_force_opt(aon, rule);
    if (opt.witness) {
      ShiftAction lifted = lift_action_to_unit(aon, unit, *opt.witness);
      CHECK(is_successful(unit.instance, lifted, rule));
      CHECK(lifted.shifts[0] == (opt.witness->shifts[0] > 0 ? 2 + 3 : 0));
    }
  }
  SUBCASE("sandwich min{B', B opt} <= opt' <= (B + width) opt on tiny instances") {
    int verified = 0;
    for (uint64_t seed = 0; seed < 40 && verified < 6; ++seed) {
      Instance cand = random_instance(seed, 4, 3, RandomPriceFamily::OneInfAon);
      Rule rule = Rule::copeland(kHalf);
      OracleResult base = brute_force_opt(cand, rule);
      if (!base.witness || base.opt_cost == ExtRational(0)) continue;
      for (long long B : {2, 3}) {
        AonToUnitResult lifted = aon_to_unit(cand, B, 5 * B);
        OracleResult prime = brute_force_opt(lifted.instance, rule, 500'000'000);
        REQUIRE(prime.witness);
        Rational opt = base.opt_cost.value();
        Rational optp = prime.opt_cost.value();
        CHECK(optp >= std::min(Rational(5 * B), Rational(B) * opt));
        CHECK(optp <= (Rational(B) + width(cand)) * opt);
      }
      ++verified;
    }
    CHECK(verified >= 3);
  }
  SUBCASE("rejects bad inputs") {
    CHECK_THROWS_AS(aon_to_unit(aon, 5, 2), std::invalid_argument);
    Instance unit_prices(e, 3,
                         {PriceFunction::unit(3), PriceFunction::unit(0), PriceFunction::unit(2)});
    CHECK_THROWS_AS(aon_to_unit(unit_prices, 2, 4), std::invalid_argument);
  }
}

TEST_CASE("reduce_dks_unit composes the two stages") {
  Graph path(3, {{0, 1}, {1, 2}});
  ReductionOutput aon = reduce_dks_aon(path, 2, 1, kHalf);
  ReductionOutput unit = reduce_dks_unit(path, 2, 1, kHalf);
  CHECK(unit.instance.voter_count() == aon.instance.voter_count());
  CHECK(classify_prices(unit.instance).kind == PriceFamilyKind::Unit);
  REQUIRE(unit.witness);
  CHECK(unit.witness->claimed_cost_bound == ExtRational(2 * 3 * 2));
  CHECK(cost(unit.instance, unit.witness->action) <= unit.witness->claimed_cost_bound);
  CHECK(is_successful(unit.instance, unit.witness->action, unit.rule));
}

TEST_CASE("reduce_clique_aon on K4") {
  Graph k4 = Graph::complete(4);
  ReductionOutput out = reduce_clique_aon(k4, 3, kHalf);
  const Instance& inst = out.instance;
  CHECK(width(inst) == 2);
  ScoreTable scores = copeland_scores(inst.election, kHalf);
  int p = inst.preferred, d = p + 1;
  CHECK(scores.scores[p] == 9 - 3);  // |D| - k
  CHECK(scores.scores[d] == 9);
  auto margins = pairwise_margins(inst.election);
  for (int u = 0; u < 4; ++u) CHECK(margins[u][p] - margins[p][u] == 2 * 3 - 3);
  REQUIRE(out.witness);
  CHECK(out.witness->claimed_cost_bound == ExtRational(3));  // C(3,2)
  CHECK(cost(inst, out.witness->action) == ExtRational(3));
  CHECK(is_successful(inst, out.witness->action, out.rule));
}

TEST_CASE("reduce_clique_gap unit stage (K3, full clique)") {
  Graph k3 = Graph::complete(3);
  ReductionOutput out = reduce_clique_gap(k3, 3, Rational(9, 10), kHalf);
  REQUIRE(out.witness);
  // B = ceil(4 / 0.9) = 5, witness shifts through 5 fillers + 2 originals
  CHECK(out.witness->claimed_cost_bound == ExtRational((5 + 2) * 3));
  CHECK(cost(out.instance, out.witness->action) == ExtRational(21));
  CHECK(is_successful(out.instance, out.witness->action, out.rule));
}

TEST_CASE("reduce_setcover") {
  SetCoverInstance sc(3, {{0, 1}, {1, 2}, {2}});
  SUBCASE("all-or-nothing variant matches the set-cover optimum") {
    ReductionOutput out = reduce_setcover(sc, false, kHalf);
    REQUIRE(out.witness);
    long long opt_cover = brute_force_set_cover(sc);
    CHECK(out.witness->claimed_cost_bound == ExtRational(opt_cover));
    CHECK(cost(out.instance, out.witness->action) == ExtRational(opt_cover));
    CHECK(is_successful(out.instance, out.witness->action, out.rule));
    OracleResult oracle = brute_force_opt(out.instance, out.rule);
    CHECK(oracle.opt_cost == ExtRational(opt_cover));
  }
  SUBCASE("unit variant witness stays within 2B opt") {
    ReductionOutput out = reduce_setcover(sc, true, kHalf);
    REQUIRE(out.witness);
    CHECK(is_successful(out.instance, out.witness->action, out.rule));
    CHECK(cost(out.instance, out.witness->action) <= out.witness->claimed_cost_bound);
  }
  SUBCASE("rejects an empty universe") {
    CHECK_THROWS_AS(SetCoverInstance(0, {{}}), std::invalid_argument);
  }
}

TEST_CASE("reduce_vc3") {
  Graph k4 = Graph::complete(4);  // 3-regular
  ReductionOutput out = reduce_vc3(k4, 3);
  const Instance& inst = out.instance;

  SUBCASE("closed-form Borda scores") {
    CHECK(inst.candidate_count() == 18);  // (9/2) n_G
    CHECK(inst.voter_count() == 20);      // 2 n_G + 2L + 2
    ScoreTable scores = positional_scores(inst.election);
    CHECK(scores.scores[0] == 155);                // p
    for (int e = 1; e <= 6; ++e) CHECK(scores.scores[e] == 198);
    CHECK(scores.scores[7] == 157);                // t, the top dummy
    for (int c = 8; c < 18; ++c) CHECK(scores.scores[c] == 156);
    CHECK(classify_prices(inst).kind == PriceFamilyKind::UniformAllOrNothing);
  }
  SUBCASE("cover bribe succeeds") {
    REQUIRE(out.witness);
    CHECK(cost(inst, out.witness->action) <= ExtRational(3));
    CHECK(is_successful(inst, out.witness->action, out.rule));
  }
  SUBCASE("soundness spot-check on the cube graph") {
    // Q3 is 3-regular with minimum vertex cover 4: no 3-voter bribe works.
    Graph q3(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4},
                 {0, 4}, {1, 5}, {2, 6}, {3, 7}});
    ReductionOutput hard = reduce_vc3(q3, 3);
    CHECK_FALSE(hard.witness);
    const Instance& hi = hard.instance;
    int n = hi.voter_count();
    bool any_success = false;
    for (int a = 0; a < n && !any_success; ++a)
      for (int b = a; b < n && !any_success; ++b)
        for (int c = b; c < n && !any_success; ++c) {
          ShiftAction action = ShiftAction::zero(n);
          action.shifts[a] = hi.max_shift(a);
          action.shifts[b] = hi.max_shift(b);
          action.shifts[c] = hi.max_shift(c);
          if (is_successful(hi, action, hard.rule)) any_success = true;
        }
    CHECK_FALSE(any_success);
  }
  SUBCASE("input validation") {
    CHECK_THROWS_AS(reduce_vc3(Graph::complete(5), 3), std::invalid_argument);
    CHECK_THROWS_AS(reduce_vc3(k4, 2), std::invalid_argument);
    CHECK_THROWS_AS(reduce_vc3(k4, 4), std::invalid_argument);
  }
}
