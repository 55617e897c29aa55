#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "shiftbribery/pricing.hpp"

namespace shiftbribery {

struct Graph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;  // normalized u < v, sorted, duplicate-free

  Graph(int num_vertices, std::vector<std::pair<int, int>> edges);

  int degree(int u) const;
  std::vector<int> incident_edges(int u) const;  // edge indices, ascending
  bool is_regular(int degree) const;
  long long edges_within(const std::vector<int>& vertices) const;
  static Graph complete(int n);
};

struct SetCoverInstance {
  int universe_size = 0;
  std::vector<std::vector<int>> sets;  // each sorted ascending, subset of [0, N)

  SetCoverInstance(int universe_size, std::vector<std::vector<int>> sets);
};

/// The planted combinatorial object of a reduction and the cheap successful
/// shift action it induces.
struct ReductionWitness {
  std::vector<int> planted;
  ShiftAction action;
  ExtRational claimed_cost_bound;
};

struct ReductionOutput {
  Instance instance;
  Rule rule;
  std::optional<ReductionWitness> witness;
};

/// The hso/hst preference-order pair: together the two votes make c win the
/// pairwise elections against the (|T|-1)/2 candidates cyclically after it
/// and tie everything else, while all pairs not involving c tie.
std::pair<std::vector<int>, std::vector<int>> half_split_orders(const std::vector<int>& order,
                                                                int candidate);

/// Filler election over A, B and the candidates p, d (together all of
/// 0..m-1, |A|+|B| odd): p loses to each A-candidate by 2b+1 votes and gets
/// Copeland score |B|-a+1, d gets |B|, and everyone in A or B stays at or
/// below (|A|+|B|+3)/2.
Election dummy_election(const std::vector<int>& A, const std::vector<int>& B, int p, int d, int a,
                        int b);

/// Densest-k-Subgraph -> Copeland shift bribery with (1, inf)-all-or-nothing
/// prices. A k-subset inducing >= t edges yields a witness of cost k.
ReductionOutput reduce_dks_aon(const Graph& g, int k, int t, const Rational& alpha,
                               std::optional<std::vector<int>> plant = std::nullopt);

struct AonToUnitResult {
  Instance instance;
  std::vector<int> block_sizes;  // |D_v| per voter
};

/// Repricing gadget: (B + B')*|V| filler candidates, a block of B (finite
/// voters) or B' (infinite ones) directly above p per vote, unit prices.
/// Preserves min{B', B*opt(I)} <= opt(I') <= (B + width) * opt(I).
AonToUnitResult aon_to_unit(const Instance& inst, long long B, long long B_prime);

/// Shift-to-top action of the unit-stage instance induced by an all-or-
/// nothing action of the original.
ShiftAction lift_action_to_unit(const Instance& aon, const AonToUnitResult& unit,
                                const ShiftAction& action);

/// reduce_dks_aon composed with aon_to_unit, B = |V_G|, B' = |V_G|^4 + 1.
ReductionOutput reduce_dks_unit(const Graph& g, int k, int t, const Rational& alpha,
                                std::optional<std::vector<int>> plant = std::nullopt);

/// Width-2 stage of the clique reduction: per-edge voter pairs with orders
/// u1 > u2 > p > rest, dummy filler with margins 2k-3. A planted k-clique
/// yields a witness of cost C(k,2).
ReductionOutput reduce_clique_aon(const Graph& g, int k, const Rational& alpha,
                                  std::optional<std::vector<int>> plant = std::nullopt);

/// reduce_clique_aon composed with aon_to_unit, B = ceil(4/delta),
/// B' = B(|V_G|^4 + 1). A planted k-clique yields a witness of cost
/// (B+2) * C(k,2).
ReductionOutput reduce_clique_gap(const Graph& g, int k, const Rational& delta,
                                  const Rational& alpha,
                                  std::optional<std::vector<int>> plant = std::nullopt);

/// Set Cover -> Copeland shift bribery with opt preserved exactly; the unit
/// variant composes through aon_to_unit with B = width*M + 1, B' = B*M.
ReductionOutput reduce_setcover(const SetCoverInstance& sc, bool unit, const Rational& alpha,
                                std::optional<std::vector<int>> plant = std::nullopt);

/// Vertex Cover on 3-regular graphs -> Borda shift bribery with uniform
/// all-or-nothing prices; a cover of size <= k yields a successful k-voter
/// bribe.
ReductionOutput reduce_vc3(const Graph& g, int k,
                           std::optional<std::vector<int>> plant = std::nullopt);

}  // namespace shiftbribery
