#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "dodgson/election.hpp"

namespace dodgson {

// Confidence tag attached to every heuristic answer. A `definitely` answer is
// guaranteed to be correct; a `maybe` answer carries no promise at all.
enum class Confidence { definitely, maybe };

std::string_view to_string(Confidence c);

struct GreedyScoreResult {
  std::int64_t score = 0;
  Confidence confidence = Confidence::definitely;

  friend bool operator==(const GreedyScoreResult&,
                         const GreedyScoreResult&) = default;
};

struct GreedyWinnerResult {
  bool winner = true;
  Confidence confidence = Confidence::definitely;

  friend bool operator==(const GreedyWinnerResult&,
                         const GreedyWinnerResult&) = default;
};

struct GreedyWinnersResult {
  std::vector<Candidate> winners;  // ascending by index
  std::vector<std::int64_t> scores;  // greedy score per slot(candidate)
  Confidence confidence = Confidence::definitely;
};

// Greedy Dodgson score of c. For every adversary d that c does not already
// beat, c needs floor(deficit/2)+1 pairwise flips. If each such d sits
// directly above c in more than deficit/2 votes, those flips are single
// adjacent swaps and the sum is the exact score (`definitely`). Otherwise the
// answer is tagged `maybe` and the sum is bumped by one per saturated
// adversary. O(n*m).
GreedyScoreResult greedy_score(const PairwiseStats& stats);
GreedyScoreResult greedy_score(const Election& e, Candidate c);
inline GreedyScoreResult greedy_score(const DodgsonTriple& t) {
  return greedy_score(t.election, t.candidate);
}

// Is c a Dodgson winner? Scores c and then every other candidate; c loses
// only to a strictly smaller greedy score. Any `maybe` subcall makes the
// whole answer `maybe`.
GreedyWinnerResult greedy_winner(const Election& e, Candidate c);
inline GreedyWinnerResult greedy_winner(const DodgsonTriple& t) {
  return greedy_winner(t.election, t.candidate);
}

// One greedy_score per candidate; returns the argmin set. With `definitely`
// the set is exactly the Dodgson winner set.
GreedyWinnersResult greedy_all_winners(const Election& e);

}  // namespace dodgson
