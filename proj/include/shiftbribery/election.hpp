#pragma once

#include <string>
#include <vector>

#include "shiftbribery/rational.hpp"

namespace shiftbribery {

/// An election: m candidates (dense indices 0..m-1), n voters, one full
/// preference permutation per voter, and optional per-voter scoring vectors.
/// Ranks are 1-based throughout the API; rank 1 is the most preferred.
/// When no scoring vectors are present, positional scoring means Borda
/// (m-1, ..., 1, 0). Instances are immutable after construction.
class Election {
 public:
  Election(int num_candidates, std::vector<std::vector<int>> prefs,
           std::vector<std::vector<Rational>> scoring_vectors = {},
           std::vector<std::string> labels = {});

  int candidate_count() const { return m_; }
  int voter_count() const { return n_; }

  const std::vector<int>& preference(int voter) const { return prefs_[voter]; }
  const std::vector<std::vector<int>>& preferences() const { return prefs_; }

  /// Candidate at 1-based rank r in voter v's order.
  int candidate_at(int voter, int rank) const { return prefs_[voter][rank - 1]; }
  /// 1-based rank of candidate c in voter v's order (pi_v^{-1}(c)).
  int rank_of(int voter, int candidate) const { return ranks_[voter][candidate]; }

  bool has_scoring_vectors() const { return !scoring_.empty(); }
  const std::vector<std::vector<Rational>>& scoring_vectors() const { return scoring_; }

  /// Points voter v awards to the candidate at 1-based rank r.
  Rational weight(int voter, int rank) const;
  /// Delta w^v_r = w^v_r - w^v_{r+1}; zero at rank m.
  Rational weight_drop(int voter, int rank) const;

  const std::vector<std::string>& labels() const { return labels_; }

 private:
  int m_;
  int n_;
  std::vector<std::vector<int>> prefs_;   // prefs_[v][r-1] = candidate at rank r
  std::vector<std::vector<int>> ranks_;   // ranks_[v][c] = 1-based rank of c
  std::vector<std::vector<Rational>> scoring_;
  std::vector<std::string> labels_;
};

struct Rule {
  enum class Kind { PositionalScoring, Copeland };
  Kind kind = Kind::PositionalScoring;
  Rational alpha = 0;  // Copeland tie reward, in [0, 1]

  static Rule positional() { return Rule{Kind::PositionalScoring, 0}; }
  static Rule copeland(const Rational& alpha);
  bool is_copeland() const { return kind == Kind::Copeland; }
};

/// Per-voter shift counts for the preferred candidate.
struct ShiftAction {
  std::vector<int> shifts;

  static ShiftAction zero(int num_voters) { return ShiftAction{std::vector<int>(num_voters, 0)}; }
  long long unit_shifts() const;
  bool operator==(const ShiftAction& o) const { return shifts == o.shifts; }
};

struct ScoreTable {
  std::vector<Rational> scores;

  Rational max_score() const;
};

ScoreTable positional_scores(const Election& e);

/// N[c][c'] = number of voters preferring c to c'. Quadratic memory; meant
/// for small candidate sets. copeland_scores does not go through this.
std::vector<std::vector<int>> pairwise_margins(const Election& e);

ScoreTable copeland_scores(const Election& e, const Rational& alpha);

ScoreTable scores_under(const Election& e, const Rule& rule);

/// Validates the action against (e, preferred): 0 <= s_v <= rank(p) - 1.
void check_shift_action(const Election& e, int preferred, const ShiftAction& s);

/// Moves p up by s_v positions in each vote; candidates it passes each move
/// down one rank. Rejects s_v >= pi_v^{-1}(p).
Election apply_shift(const Election& e, int preferred, const ShiftAction& s);

/// All candidates with maximum score (co-winner model); never empty.
std::vector<int> winners(const Election& e, const Rule& rule);

bool is_winner(const Election& e, int candidate, const Rule& rule);

}  // namespace shiftbribery
