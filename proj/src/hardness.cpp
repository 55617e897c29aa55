#include "shiftbribery/hardness.hpp"

#include <algorithm>
#include <initializer_list>
#include <numeric>
#include <set>
#include <stdexcept>

#include "detail.hpp"

namespace shiftbribery {

namespace {

std::vector<int> reversed(std::vector<int> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

void append(std::vector<int>& out, const std::vector<int>& part) {
  out.insert(out.end(), part.begin(), part.end());
}

// Exhaustive subset search helpers, used only to discover witnesses on tiny
// inputs when no planted object is supplied.
constexpr long long kSearchBudget = 2'000'000;

bool next_combination(std::vector<int>& idx, int n) {
  int k = static_cast<int>(idx.size());
  int i = k - 1;
  while (i >= 0 && idx[i] == n - k + i) --i;
  if (i < 0) return false;
  ++idx[i];
  for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

double choose(int n, int k) {
  double r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

Graph::Graph(int num_vertices_, std::vector<std::pair<int, int>> edges_)
    : num_vertices(num_vertices_), edges(std::move(edges_)) {
  if (num_vertices < 1) throw std::invalid_argument("graph needs at least one vertex");
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= num_vertices) throw std::invalid_argument("edge endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edges are not allowed");
}

int Graph::degree(int u) const {
  int d = 0;
  for (const auto& [a, b] : edges) d += (a == u) + (b == u);
  return d;
}

std::vector<int> Graph::incident_edges(int u) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(edges.size()); ++i)
    if (edges[i].first == u || edges[i].second == u) out.push_back(i);
  return out;
}

bool Graph::is_regular(int d) const {
  for (int u = 0; u < num_vertices; ++u)
    if (degree(u) != d) return false;
  return true;
}

long long Graph::edges_within(const std::vector<int>& vertices) const {
  std::set<int> inside(vertices.begin(), vertices.end());
  long long count = 0;
  for (const auto& [u, v] : edges) count += inside.count(u) && inside.count(v);
  return count;
}

Graph Graph::complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

SetCoverInstance::SetCoverInstance(int universe_size_, std::vector<std::vector<int>> sets_)
    : universe_size(universe_size_), sets(std::move(sets_)) {
  if (universe_size < 1) throw std::invalid_argument("empty universe");
  for (auto& s : sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int e : s)
      if (e < 0 || e >= universe_size) throw std::invalid_argument("set element out of range");
  }
}

std::pair<std::vector<int>, std::vector<int>> half_split_orders(const std::vector<int>& order,
                                                                int candidate) {
  int size = static_cast<int>(order.size());
  if (size % 2 == 0) throw std::invalid_argument("half_split_orders needs an odd-sized set");
  int pos = -1;
  for (int i = 0; i < size; ++i)
    if (order[i] == candidate) pos = i;
  if (pos < 0) throw std::invalid_argument("candidate not in the order");

  int half = (size - 1) / 2;
  std::vector<bool> in_front(size, false);
  for (int j = 1; j <= half; ++j) in_front[(pos + j) % size] = true;
  std::vector<int> front, back;  // both in the canonical (input) order
  for (int i = 0; i < size; ++i) {
    if (i == pos) continue;
    (in_front[i] ? front : back).push_back(order[i]);
  }

  std::vector<int> hso, hst;
  hso.push_back(candidate);
  append(hso, front);
  append(hso, back);
  hst = reversed(back);
  hst.push_back(candidate);
  append(hst, reversed(front));
  return {hso, hst};
}

Election dummy_election(const std::vector<int>& A, const std::vector<int>& B, int p, int d, int a,
                        int b) {
  if ((A.size() + B.size()) % 2 == 0)
    throw std::invalid_argument("dummy_election needs |A| + |B| odd");
  if (a < 0 || a > static_cast<int>(B.size()))
    throw std::invalid_argument("dummy_election needs 0 <= a <= |B|");
  if (b < 0) throw std::invalid_argument("dummy_election needs b >= 0");
  int m = static_cast<int>(A.size() + B.size()) + 2;
  {
    std::vector<int> all(A);
    append(all, B);
    all.push_back(p);
    all.push_back(d);
    std::sort(all.begin(), all.end());
    for (int i = 0; i < m; ++i)
      if (all[i] != i)
        throw std::invalid_argument("A, B, p, d must partition the candidate range");
  }
  std::vector<int> As(A), Bs(B);
  std::sort(As.begin(), As.end());
  std::sort(Bs.begin(), Bs.end());
  std::vector<int> AB(As);
  append(AB, Bs);
  std::sort(AB.begin(), AB.end());
  std::vector<int> S(Bs.begin(), Bs.begin() + a);
  std::vector<int> BmS(Bs.begin() + a, Bs.end());

  std::vector<std::vector<int>> prefs;
  auto vote = [&](std::initializer_list<std::vector<int>> parts) {
    std::vector<int> order;
    for (const auto& part : parts) append(order, part);
    prefs.push_back(std::move(order));
  };

  vote({AB, {p}, {d}});
  for (int i = 0; i < b; ++i) {
    vote({As, {p}, Bs, {d}});
    vote({{d}, reversed(Bs), reversed(As), {p}});
  }
  vote({{d}, Bs, As, {p}});
  vote({{p}, reversed(As), {d}, reversed(Bs)});
  vote({{p}, BmS, S, As, {d}});
  vote({{d}, reversed(As), reversed(S), {p}, reversed(BmS)});
  for (int c : AB) {
    auto [hso, hst] = half_split_orders(AB, c);
    vote({hso, {p}, {d}});
    vote({{d}, {p}, hst});
  }
  return Election(m, std::move(prefs));
}

namespace {

// Common frame of the Copeland reductions: per-object voter pairs (order +
// reverse, finite price for the first) followed by ∞-priced dummy voters.
struct CopelandFrame {
  std::vector<std::vector<int>> prefs;
  std::vector<PriceFunction> prices;
  int m = 0;
  int p = -1;

  void add_pair(const std::vector<int>& order) {
    int rank_p = 0;
    while (order[rank_p] != p) ++rank_p;  // 0-based position of p
    prefs.push_back(order);
    prices.push_back(PriceFunction::all_or_nothing(rank_p, ExtRational(1)));
    prefs.push_back(reversed(order));
    prices.push_back(
        PriceFunction::all_or_nothing(m - 1 - rank_p, ExtRational::infinity()));
  }

  void add_dummy(const Election& dummy) {
    for (int v = 0; v < dummy.voter_count(); ++v) {
      prefs.push_back(dummy.preference(v));
      prices.push_back(PriceFunction::all_or_nothing(dummy.rank_of(v, p) - 1,
                                                     ExtRational::infinity()));
    }
  }

  Instance build() { return Instance(Election(m, std::move(prefs)), p, std::move(prices)); }
};

}  // namespace

ReductionOutput reduce_dks_aon(const Graph& g, int k, int t, const Rational& alpha,
                               std::optional<std::vector<int>> plant) {
  int ne = static_cast<int>(g.edges.size());
  if (k < 1 || k > g.num_vertices) throw std::invalid_argument("need 1 <= k <= |V_G|");
  if (t < 1 || t > ne + 4) throw std::invalid_argument("t out of range");

  // Candidates: edges 0..ne-1, dummies ne..2ne+4, then p and d.
  int nd = ne + 5;
  int p = ne + nd, d = p + 1;
  CopelandFrame frame;
  frame.m = ne + nd + 2;
  frame.p = p;

  for (int u = 0; u < g.num_vertices; ++u) {
    std::vector<int> order = g.incident_edges(u);
    order.push_back(p);
    for (int c = 0; c < frame.m; ++c)
      if (c != p && !std::binary_search(order.begin(), order.end() - 1, c)) order.push_back(c);
    frame.add_pair(order);
  }
  std::vector<int> A(ne), B(nd);
  std::iota(A.begin(), A.end(), 0);
  std::iota(B.begin(), B.end(), ne);
  frame.add_dummy(dummy_election(A, B, p, d, t + 1, 1));
  Instance inst = frame.build();

  ReductionOutput out{std::move(inst), Rule::copeland(alpha), std::nullopt};
  if (!plant && choose(g.num_vertices, k) <= kSearchBudget) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    do {
      if (g.edges_within(idx) >= t) {
        plant = idx;
        break;
      }
    } while (next_combination(idx, g.num_vertices));
  }
  if (plant) {
    if (g.edges_within(*plant) < t)
      throw std::invalid_argument("planted vertex set induces fewer than t edges");
    ShiftAction action = ShiftAction::zero(out.instance.voter_count());
    for (int u : *plant) action.shifts[2 * u] = out.instance.max_shift(2 * u);  // v_u to the top
    out.witness = ReductionWitness{*plant, std::move(action), ExtRational(k)};
  }
  return out;
}

AonToUnitResult aon_to_unit(const Instance& inst, long long B, long long B_prime) {
  if (B < 1 || B > B_prime) throw std::invalid_argument("need 1 <= B <= B'");
  if (inst.voter_count() < 3) throw std::invalid_argument("aon_to_unit needs at least 3 voters");
  const int n = inst.voter_count();
  const int m = inst.candidate_count();

  std::vector<int> block(n, 0);
  for (int v = 0; v < n; ++v) {
    int shifts = inst.max_shift(v);
    bool finite_one = shifts > 0;
    for (int s = 1; s <= shifts; ++s)
      if (inst.price(v, s) != ExtRational(1)) finite_one = false;
    if (shifts > 0 && !finite_one)
      for (int s = 1; s <= shifts; ++s)
        if (!inst.price(v, s).is_infinite())
          throw std::invalid_argument("aon_to_unit needs (1, inf)-all-or-nothing prices");
    block[v] = static_cast<int>(finite_one ? B : B_prime);
  }

  long long fillers = (B + B_prime) * n;
  int new_m = m + static_cast<int>(fillers);
  std::vector<std::vector<int>> prefs(n);
  std::vector<PriceFunction> prices;
  int next_filler = m;
  for (int v = 0; v < n; ++v) {
    int first = next_filler;
    next_filler += block[v];
    const auto& old = inst.election.preference(v);
    int rp = inst.election.rank_of(v, inst.preferred);
    std::vector<int>& order = prefs[v];
    order.reserve(new_m);
    for (int r = 1; r < rp; ++r) order.push_back(old[r - 1]);
    for (int f = first; f < next_filler; ++f) order.push_back(f);
    order.push_back(inst.preferred);
    for (int r = rp + 1; r <= m; ++r) order.push_back(old[r - 1]);
    for (int f = m; f < new_m; ++f)
      if (f < first || f >= next_filler) order.push_back(f);
    prices.push_back(PriceFunction::unit(rp - 1 + block[v]));
  }
  return AonToUnitResult{
      Instance(Election(new_m, std::move(prefs)), inst.preferred, std::move(prices)),
      std::move(block)};
}

ShiftAction lift_action_to_unit(const Instance& aon, const AonToUnitResult& unit,
                                const ShiftAction& action) {
  ShiftAction lifted = ShiftAction::zero(aon.voter_count());
  for (int v = 0; v < aon.voter_count(); ++v)
    if (action.shifts[v] > 0)
      lifted.shifts[v] = unit.block_sizes[v] + aon.election.rank_of(v, aon.preferred) - 1;
  return lifted;
}

ReductionOutput reduce_dks_unit(const Graph& g, int k, int t, const Rational& alpha,
                                std::optional<std::vector<int>> plant) {
  ReductionOutput aon = reduce_dks_aon(g, k, t, alpha, std::move(plant));
  long long nv = g.num_vertices;
  AonToUnitResult unit = aon_to_unit(aon.instance, nv, nv * nv * nv * nv + 1);
  ReductionOutput out{std::move(unit.instance), aon.rule, std::nullopt};
  if (aon.witness) {
    ShiftAction lifted = lift_action_to_unit(aon.instance, unit, aon.witness->action);
    out.witness =
        ReductionWitness{aon.witness->planted, std::move(lifted), ExtRational(2 * nv * k)};
  }
  return out;
}

ReductionOutput reduce_clique_aon(const Graph& g, int k, const Rational& alpha,
                                  std::optional<std::vector<int>> plant) {
  if (k < 2 || k > g.num_vertices) throw std::invalid_argument("need 2 <= k <= |V_G|");
  int nv = g.num_vertices;
  int nd = nv + 5;
  int p = nv + nd, d = p + 1;

  CopelandFrame frame;
  frame.m = nv + nd + 2;
  frame.p = p;
  for (const auto& [u1, u2] : g.edges) {
    std::vector<int> order{u1, u2, p};
    for (int c = 0; c < frame.m; ++c)
      if (c != u1 && c != u2 && c != p) order.push_back(c);
    frame.add_pair(order);
  }
  std::vector<int> A(nv), B(nd);
  std::iota(A.begin(), A.end(), 0);
  std::iota(B.begin(), B.end(), nv);
  frame.add_dummy(dummy_election(A, B, p, d, k + 1, k - 2));
  Instance aon_stage = frame.build();

  ReductionOutput out{std::move(aon_stage), Rule::copeland(alpha), std::nullopt};
  if (!plant && choose(nv, k) <= kSearchBudget) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    do {
      if (g.edges_within(idx) == static_cast<long long>(k) * (k - 1) / 2) {
        plant = idx;
        break;
      }
    } while (next_combination(idx, nv));
  }
  if (plant) {
    if (g.edges_within(*plant) != static_cast<long long>(k) * (k - 1) / 2)
      throw std::invalid_argument("planted set is not a k-clique");
    std::set<int> inside(plant->begin(), plant->end());
    ShiftAction action = ShiftAction::zero(out.instance.voter_count());
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
      if (inside.count(g.edges[e].first) && inside.count(g.edges[e].second))
        action.shifts[2 * e] = out.instance.max_shift(2 * e);
    out.witness = ReductionWitness{*plant, std::move(action),
                                   ExtRational(static_cast<long long>(k) * (k - 1) / 2)};
  }
  return out;
}

ReductionOutput reduce_clique_gap(const Graph& g, int k, const Rational& delta,
                                  const Rational& alpha, std::optional<std::vector<int>> plant) {
  if (delta <= 0 || delta >= 1) throw std::invalid_argument("need 0 < delta < 1");
  ReductionOutput aon = reduce_clique_aon(g, k, alpha, std::move(plant));
  long long nv = g.num_vertices;
  long long Bv = detail::ceil_rational(4 / delta);
  long long Bp = Bv * (nv * nv * nv * nv + 1);
  AonToUnitResult unit = aon_to_unit(aon.instance, Bv, Bp);
  ReductionOutput out{std::move(unit.instance), aon.rule, std::nullopt};
  if (aon.witness) {
    ShiftAction lifted = lift_action_to_unit(aon.instance, unit, aon.witness->action);
    out.witness = ReductionWitness{aon.witness->planted, std::move(lifted),
                                   ExtRational((Bv + 2) * static_cast<long long>(k) * (k - 1) / 2)};
  }
  return out;
}

ReductionOutput reduce_setcover(const SetCoverInstance& sc, bool unit, const Rational& alpha,
                                std::optional<std::vector<int>> plant) {
  int N = sc.universe_size;
  int M = static_cast<int>(sc.sets.size());
  if (M < 1) throw std::invalid_argument("need at least one set");
  int nd = N + 5;
  int p = N + nd, d = p + 1;

  CopelandFrame frame;
  frame.m = N + nd + 2;
  frame.p = p;
  for (const auto& s : sc.sets) {
    std::vector<int> order(s);
    order.push_back(p);
    for (int c = 0; c < frame.m; ++c)
      if (c != p && !std::binary_search(s.begin(), s.end(), c)) order.push_back(c);
    frame.add_pair(order);
  }
  std::vector<int> A(N), B(nd);
  std::iota(A.begin(), A.end(), 0);
  std::iota(B.begin(), B.end(), N);
  frame.add_dummy(dummy_election(A, B, p, d, N + 1, 0));
  Instance aon_stage = frame.build();

  if (!plant && M <= 20) {
    // Smallest cover, by size then lexicographically.
    for (int size = 0; size <= M && !plant; ++size) {
      std::vector<int> idx(size);
      std::iota(idx.begin(), idx.end(), 0);
      bool more = true;
      while (more) {
        std::vector<bool> hit(N, false);
        for (int i : idx)
          for (int e : sc.sets[i]) hit[e] = true;
        if (std::find(hit.begin(), hit.end(), false) == hit.end()) {
          plant = idx;
          break;
        }
        more = size > 0 && next_combination(idx, M);
      }
    }
  }
  std::optional<ShiftAction> aon_action;
  if (plant) {
    std::vector<bool> hit(N, false);
    for (int i : *plant)
      for (int e : sc.sets[i]) hit[e] = true;
    if (std::find(hit.begin(), hit.end(), false) != hit.end())
      throw std::invalid_argument("planted collection is not a cover");
    aon_action = ShiftAction::zero(aon_stage.voter_count());
    for (int i : *plant) aon_action->shifts[2 * i] = aon_stage.max_shift(2 * i);
  }

  if (!unit) {
    ReductionOutput out{std::move(aon_stage), Rule::copeland(alpha), std::nullopt};
    if (plant)
      out.witness = ReductionWitness{*plant, *aon_action,
                                     ExtRational(static_cast<long long>(plant->size()))};
    return out;
  }

  long long b = width(aon_stage);
  long long Bv = b * M + 1;
  long long Bp = Bv * M;
  AonToUnitResult lifted = aon_to_unit(aon_stage, Bv, Bp);
  ReductionOutput out{std::move(lifted.instance), Rule::copeland(alpha), std::nullopt};
  if (plant) {
    ShiftAction action = lift_action_to_unit(aon_stage, lifted, *aon_action);
    out.witness = ReductionWitness{*plant, std::move(action),
                                   ExtRational(2 * Bv * static_cast<long long>(plant->size()))};
  }
  return out;
}

ReductionOutput reduce_vc3(const Graph& g, int k, std::optional<std::vector<int>> plant) {
  if (!g.is_regular(3)) throw std::invalid_argument("reduce_vc3 needs a 3-regular graph");
  int ng = g.num_vertices;
  int mg = static_cast<int>(g.edges.size());
  if (k < 3 || k >= ng) throw std::invalid_argument("need 3 <= k < |V_G|");

  // Candidates: p = 0, edges 1..mg, dummies mg+1..mg+3ng-1 with t first.
  int p = 0;
  std::vector<int> E(mg), D(3 * ng - 1);
  std::iota(E.begin(), E.end(), 1);
  std::iota(D.begin(), D.end(), mg + 1);
  int m = 1 + mg + static_cast<int>(D.size());

  std::vector<std::vector<int>> prefs;
  auto vote = [&](std::initializer_list<std::vector<int>> parts) {
    std::vector<int> order;
    for (const auto& part : parts) append(order, part);
    prefs.push_back(std::move(order));
  };
  for (int u = 0; u < ng; ++u) {
    std::vector<int> inc = g.incident_edges(u);  // ascending edge indices a < b < c
    for (int& e : inc) e += 1;                   // to candidate ids
    std::vector<int> rest;
    for (int e : E)
      if (std::find(inc.begin(), inc.end(), e) == inc.end()) rest.push_back(e);
    vote({D, inc, {p}, rest});
    vote({reversed(D), reversed(inc), {p}, reversed(rest)});
  }
  int L = ng + 2 * k - 5;
  for (int i = 0; i < L; ++i) {
    vote({E, {p}, D});
    vote({reversed(E), {p}, reversed(D)});
  }
  int t = D.front();
  std::vector<int> D_rest(D.begin() + 1, D.end());
  vote({E, {t}, {p}, D_rest});
  vote({reversed(E), {p}, reversed(D)});

  int n = static_cast<int>(prefs.size());
  std::vector<PriceFunction> prices;
  Election election(m, std::move(prefs));
  for (int v = 0; v < n; ++v)
    prices.push_back(
        PriceFunction::all_or_nothing(election.rank_of(v, p) - 1, ExtRational(1)));
  Instance inst(std::move(election), p, std::move(prices));

  ReductionOutput out{std::move(inst), Rule::positional(), std::nullopt};
  if (!plant) {
    bool found = false;
    for (int size = 0; size <= k && !found; ++size) {
      if (choose(ng, size) > kSearchBudget) break;
      std::vector<int> idx(size);
      std::iota(idx.begin(), idx.end(), 0);
      bool more = true;
      while (more) {
        bool covers = true;
        std::set<int> inside(idx.begin(), idx.end());
        for (const auto& [u, v] : g.edges)
          if (!inside.count(u) && !inside.count(v)) covers = false;
        if (covers) {
          plant = idx;
          found = true;
          break;
        }
        more = size > 0 && next_combination(idx, ng);
      }
    }
  }
  if (plant) {
    std::set<int> cover(plant->begin(), plant->end());
    for (const auto& [u, v] : g.edges)
      if (!cover.count(u) && !cover.count(v))
        throw std::invalid_argument("planted set is not a vertex cover");
    if (static_cast<int>(cover.size()) > k)
      throw std::invalid_argument("planted cover is larger than k");
    // Pad to exactly k bribed voters; the edge-candidate gaps are tuned to
    // a gain of k * (|D| + 3).
    for (int u = 0; u < ng && static_cast<int>(cover.size()) < k; ++u) cover.insert(u);
    ShiftAction action = ShiftAction::zero(out.instance.voter_count());
    for (int u : cover) action.shifts[2 * u] = out.instance.max_shift(2 * u);
    out.witness = ReductionWitness{std::vector<int>(cover.begin(), cover.end()),
                                   std::move(action), ExtRational(k)};
  }
  return out;
}

}  // namespace shiftbribery
