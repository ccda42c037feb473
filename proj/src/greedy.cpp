#include "dodgson/greedy.hpp"

#include <algorithm>

namespace dodgson {

std::string_view to_string(Confidence c) {
  return c == Confidence::definitely ? "definitely" : "maybe";
}

GreedyScoreResult greedy_score(const PairwiseStats& stats) {
  GreedyScoreResult result;
  for (std::size_t d = 0; d < stats.deficit.size(); ++d) {
    if (d == slot(stats.candidate)) continue;
    const std::int64_t deficit = stats.deficit[d];
    if (deficit < 0) continue;
    result.score += deficit / 2 + 1;
    if (deficit >= 2 * stats.swaps[d]) {
      result.confidence = Confidence::maybe;
      result.score += 1;
    }
  }
  return result;
}

GreedyScoreResult greedy_score(const Election& e, Candidate c) {
  return greedy_score(pairwise_stats(e, c));
}

GreedyWinnerResult greedy_winner(const Election& e, Candidate c) {
  const GreedyScoreResult own = greedy_score(e, c);
  GreedyWinnerResult result{true, own.confidence};
  for (Candidate d : e.all_candidates()) {
    if (d == c) continue;
    const GreedyScoreResult other = greedy_score(e, d);
    if (other.score < own.score) result.winner = false;
    if (other.confidence == Confidence::maybe) {
      result.confidence = Confidence::maybe;
    }
  }
  return result;
}

GreedyWinnersResult greedy_all_winners(const Election& e) {
  GreedyWinnersResult result;
  result.scores.reserve(e.candidates());
  for (Candidate c : e.all_candidates()) {
    const GreedyScoreResult r = greedy_score(e, c);
    result.scores.push_back(r.score);
    if (r.confidence == Confidence::maybe) {
      result.confidence = Confidence::maybe;
    }
  }
  const std::int64_t best =
      *std::min_element(result.scores.begin(), result.scores.end());
  for (Candidate c : e.all_candidates()) {
    if (result.scores[slot(c)] == best) result.winners.push_back(c);
  }
  return result;
}

}  // namespace dodgson
