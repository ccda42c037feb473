#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "dodgson/election.hpp"

namespace dodgson {

// strict: c must become a Condorcet winner (the Dodgson score).
// tie_or_beat: c must tie or beat every other candidate head-to-head.
enum class ScoreMode { strict, tie_or_beat };

std::string_view to_string(ScoreMode mode);
std::optional<ScoreMode> parse_score_mode(std::string_view text);

inline constexpr std::size_t kDefaultDpStateBudget = 100'000'000;
inline constexpr std::size_t kDefaultBfsProfileBudget = 1'000'000;

// Pairwise flips c needs against an adversary with the given deficit:
// floor(deficit/2)+1 in strict mode, ceil(deficit/2) in tie-or-beat mode,
// and zero when c already wins (or, in tie-or-beat mode, ties).
std::int64_t required_flips(std::int64_t deficit, ScoreMode mode);

// lifts[i] = number of positions c is raised in vote i. Cost is the sum.
using LiftAssignment = std::vector<std::uint32_t>;

std::int64_t lift_cost(const LiftAssignment& lifts);

// Applies the lifts to a copy of the election. Throws InvalidInput if a lift
// would move c past the top of its vote.
Election apply_lifts(const Election& e, Candidate c, const LiftAssignment& lifts);

// Number of DP states the exact solver would allocate for (e, c, mode).
std::size_t dp_state_count(const Election& e, Candidate c, ScoreMode mode);

struct ExactSolution {
  std::int64_t score = 0;
  LiftAssignment lifts;  // an optimal assignment achieving `score`
};

// Exact Dodgson score by dynamic programming over votes. The state is the
// vector of residual flips still owed to each adversary c does not yet beat,
// each component clamped at its initial need. A vote's transitions lift c by
// 0..(top - position) places; lifting past d settles one flip against d.
// Throws BudgetExceeded when the state space is larger than `state_budget`.
std::int64_t exact_dodgson_score(const Election& e, Candidate c,
                                 ScoreMode mode = ScoreMode::strict,
                                 std::size_t state_budget = kDefaultDpStateBudget);
inline std::int64_t exact_dodgson_score(
    const DodgsonTriple& t, ScoreMode mode = ScoreMode::strict,
    std::size_t state_budget = kDefaultDpStateBudget) {
  return exact_dodgson_score(t.election, t.candidate, mode, state_budget);
}

// Same as exact_dodgson_score but also reconstructs an optimal lift vector.
// Keeps one choice byte per (vote, state); the product is checked against
// `state_budget` as well.
ExactSolution exact_dodgson_solution(
    const Election& e, Candidate c, ScoreMode mode = ScoreMode::strict,
    std::size_t state_budget = kDefaultDpStateBudget);

// Assumption-free reference: breadth-first search over whole vote profiles,
// one edge per adjacent swap of any two candidates in any vote. Returns the
// distance to the nearest profile meeting the goal for `mode`. Throws
// BudgetExceeded when (m!)^n exceeds `profile_budget`.
std::int64_t bfs_swap_score(const Election& e, Candidate c,
                            ScoreMode mode = ScoreMode::strict,
                            std::size_t profile_budget = kDefaultBfsProfileBudget);
inline std::int64_t bfs_swap_score(
    const DodgsonTriple& t, ScoreMode mode = ScoreMode::strict,
    std::size_t profile_budget = kDefaultBfsProfileBudget) {
  return bfs_swap_score(t.election, t.candidate, mode, profile_budget);
}

// (m!)^n, saturating at SIZE_MAX.
std::size_t profile_count(std::uint32_t m, std::size_t n);

// Argmin set of exact scores, ascending by index. Never empty.
std::vector<Candidate> dodgson_winners(
    const Election& e, ScoreMode mode = ScoreMode::strict,
    std::size_t state_budget = kDefaultDpStateBudget);

}  // namespace dodgson
