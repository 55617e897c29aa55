#include "shiftbribery/election.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace shiftbribery {

Election::Election(int num_candidates, std::vector<std::vector<int>> prefs,
                   std::vector<std::vector<Rational>> scoring_vectors,
                   std::vector<std::string> labels)
    : m_(num_candidates),
      n_(static_cast<int>(prefs.size())),
      prefs_(std::move(prefs)),
      scoring_(std::move(scoring_vectors)),
      labels_(std::move(labels)) {
  if (m_ < 1) throw std::invalid_argument("election needs at least one candidate");
  if (n_ < 1) throw std::invalid_argument("election needs at least one voter");
  if (!scoring_.empty() && static_cast<int>(scoring_.size()) != n_)
    throw std::invalid_argument("scoring vector count must match voter count");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != m_)
    throw std::invalid_argument("label count must match candidate count");

  ranks_.assign(n_, std::vector<int>(m_, 0));
  for (int v = 0; v < n_; ++v) {
    if (static_cast<int>(prefs_[v].size()) != m_)
      throw std::invalid_argument("voter " + std::to_string(v) + ": preference is not over all candidates");
    for (int r = 0; r < m_; ++r) {
      int c = prefs_[v][r];
      if (c < 0 || c >= m_)
        throw std::invalid_argument("voter " + std::to_string(v) + ": candidate index out of range");
      if (ranks_[v][c] != 0)
        throw std::invalid_argument("voter " + std::to_string(v) + ": preference is not a permutation");
      ranks_[v][c] = r + 1;
    }
  }
  for (const auto& w : scoring_) {
    if (static_cast<int>(w.size()) != m_)
      throw std::invalid_argument("scoring vector length must equal candidate count");
    for (int r = 0; r + 1 < m_; ++r)
      if (w[r] < w[r + 1]) throw std::invalid_argument("scoring vector must be nonincreasing");
    if (w[m_ - 1] < 0) throw std::invalid_argument("scoring vector must be nonnegative");
  }
}

Rational Election::weight(int voter, int rank) const {
  if (scoring_.empty()) return Rational(m_ - rank);  // Borda
  return scoring_[voter][rank - 1];
}

Rational Election::weight_drop(int voter, int rank) const {
  if (rank >= m_) return Rational(0);
  if (scoring_.empty()) return Rational(1);
  return scoring_[voter][rank - 1] - scoring_[voter][rank];
}

Rule Rule::copeland(const Rational& alpha) {
  if (alpha < 0 || alpha > 1) throw std::invalid_argument("Copeland alpha must be in [0, 1]");
  return Rule{Kind::Copeland, alpha};
}

long long ShiftAction::unit_shifts() const {
  return std::accumulate(shifts.begin(), shifts.end(), 0LL);
}

Rational ScoreTable::max_score() const {
  return *std::max_element(scores.begin(), scores.end());
}

ScoreTable positional_scores(const Election& e) {
  ScoreTable t;
  t.scores.assign(e.candidate_count(), Rational(0));
  for (int v = 0; v < e.voter_count(); ++v)
    for (int r = 1; r <= e.candidate_count(); ++r)
      t.scores[e.candidate_at(v, r)] += e.weight(v, r);
  return t;
}

std::vector<std::vector<int>> pairwise_margins(const Election& e) {
  int m = e.candidate_count();
  std::vector<std::vector<int>> count(m, std::vector<int>(m, 0));
  for (int v = 0; v < e.voter_count(); ++v) {
    const auto& order = e.preference(v);
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) count[order[i]][order[j]] += 1;
  }
  return count;
}

namespace {

// Counts pairwise wins/ties over a candidate-major rank matrix. The pair
// loop is quadratic in m; reduction instances reach ~10^5 candidates with
// few voters, so the inner comparison runs over a short contiguous array.
// Tiles keep both operand blocks in cache, and tile pairs are handed to
// threads through a shared counter.
void copeland_tally(const Election& e, std::vector<int64_t>& wins, std::vector<int64_t>& ties) {
  const int m = e.candidate_count();
  const int n = e.voter_count();
  std::vector<uint32_t> rank_by_cand(static_cast<size_t>(m) * n);
  for (int v = 0; v < n; ++v)
    for (int r = 1; r <= m; ++r)
      rank_by_cand[static_cast<size_t>(e.candidate_at(v, r)) * n + v] = static_cast<uint32_t>(r);

  wins.assign(m, 0);
  ties.assign(m, 0);

  constexpr int kTile = 256;
  std::vector<std::pair<int, int>> tiles;
  for (int i0 = 0; i0 < m; i0 += kTile)
    for (int j0 = i0; j0 < m; j0 += kTile) tiles.emplace_back(i0, j0);

  int num_threads = 1;
  if (static_cast<double>(m) * m * n > 5e7)
    num_threads = std::max(2, static_cast<int>(std::thread::hardware_concurrency()));
  num_threads = std::min<int>(num_threads, static_cast<int>(tiles.size()));

  std::atomic<size_t> next_tile{0};
  auto work = [&](std::vector<int64_t>& w, std::vector<int64_t>& t) {
    for (;;) {
      size_t ti = next_tile.fetch_add(1);
      if (ti >= tiles.size()) return;
      auto [i0, j0] = tiles[ti];
      int i1 = std::min(i0 + kTile, m), j1 = std::min(j0 + kTile, m);
      for (int c1 = i0; c1 < i1; ++c1) {
        const uint32_t* r1 = &rank_by_cand[static_cast<size_t>(c1) * n];
        for (int c2 = std::max(c1 + 1, j0); c2 < j1; ++c2) {
          const uint32_t* r2 = &rank_by_cand[static_cast<size_t>(c2) * n];
          int cnt = 0;
          for (int v = 0; v < n; ++v) cnt += r1[v] < r2[v];
          if (2 * cnt > n) {
            ++w[c1];
          } else if (2 * cnt < n) {
            ++w[c2];
          } else {
            ++t[c1];
            ++t[c2];
          }
        }
      }
    }
  };

  if (num_threads == 1) {
    work(wins, ties);
  } else {
    std::vector<std::vector<int64_t>> tw(num_threads, std::vector<int64_t>(m, 0));
    std::vector<std::vector<int64_t>> tt(num_threads, std::vector<int64_t>(m, 0));
    std::vector<std::thread> pool;
    for (int i = 0; i < num_threads; ++i)
      pool.emplace_back([&, i] { work(tw[i], tt[i]); });
    for (auto& th : pool) th.join();
    for (int i = 0; i < num_threads; ++i)
      for (int c = 0; c < m; ++c) {
        wins[c] += tw[i][c];
        ties[c] += tt[i][c];
      }
  }
}

}  // namespace

ScoreTable copeland_scores(const Election& e, const Rational& alpha) {
  if (alpha < 0 || alpha > 1) throw std::invalid_argument("Copeland alpha must be in [0, 1]");
  std::vector<int64_t> wins, ties;
  copeland_tally(e, wins, ties);
  ScoreTable t;
  t.scores.reserve(e.candidate_count());
  for (int c = 0; c < e.candidate_count(); ++c)
    t.scores.push_back(Rational(wins[c]) + alpha * Rational(ties[c]));
  return t;
}

ScoreTable scores_under(const Election& e, const Rule& rule) {
  return rule.is_copeland() ? copeland_scores(e, rule.alpha) : positional_scores(e);
}

void check_shift_action(const Election& e, int preferred, const ShiftAction& s) {
  if (preferred < 0 || preferred >= e.candidate_count())
    throw std::invalid_argument("preferred candidate out of range");
  if (static_cast<int>(s.shifts.size()) != e.voter_count())
    throw std::invalid_argument("shift action length must equal voter count");
  for (int v = 0; v < e.voter_count(); ++v) {
    if (s.shifts[v] < 0) throw std::invalid_argument("negative shift");
    if (s.shifts[v] >= e.rank_of(v, preferred))
      throw std::invalid_argument("voter " + std::to_string(v) + ": shift " +
                                  std::to_string(s.shifts[v]) + " moves p above rank 1");
  }
}

Election apply_shift(const Election& e, int preferred, const ShiftAction& s) {
  check_shift_action(e, preferred, s);
  std::vector<std::vector<int>> prefs = e.preferences();
  for (int v = 0; v < e.voter_count(); ++v) {
    int r = e.rank_of(v, preferred);  // 1-based
    int target = r - s.shifts[v];
    for (int pos = r - 1; pos >= target; --pos) prefs[v][pos] = prefs[v][pos - 1];
    prefs[v][target - 1] = preferred;
  }
  return Election(e.candidate_count(), std::move(prefs), e.scoring_vectors(), e.labels());
}

std::vector<int> winners(const Election& e, const Rule& rule) {
  ScoreTable t = scores_under(e, rule);
  Rational best = t.max_score();
  std::vector<int> result;
  for (int c = 0; c < e.candidate_count(); ++c)
    if (t.scores[c] == best) result.push_back(c);
  return result;
}

bool is_winner(const Election& e, int candidate, const Rule& rule) {
  ScoreTable t = scores_under(e, rule);
  return t.scores[candidate] == t.max_score();
}

}  // namespace shiftbribery
