#include "dodgson/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <string>

namespace dodgson {

namespace {

constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) {
    return std::numeric_limits<std::size_t>::max();
  }
  return a * b;
}

// One useful lift of c within a vote: raise by `lift` places, settling one
// flip against every adversary digit in `passed`.
struct LiftOption {
  std::uint32_t lift;
  std::uint64_t passed;
};

// Mixed-radix encoding of the residual-need vector. Digit j ranges over
// 0..need[j]; the all-need state is the last index.
struct LiftModel {
  std::vector<int> digit_of;  // slot(d) -> digit, or -1 if d needs nothing
  std::vector<std::uint32_t> need;
  std::vector<std::size_t> stride;
  std::size_t states = 1;
};

LiftModel build_model(const Election& e, Candidate c, ScoreMode mode) {
  const PairwiseStats stats = pairwise_stats(e, c);
  LiftModel model;
  model.digit_of.assign(e.candidates(), -1);
  for (std::uint32_t d = 0; d < e.candidates(); ++d) {
    if (d == slot(c)) continue;
    const std::int64_t flips = required_flips(stats.deficit[d], mode);
    if (flips == 0) continue;
    model.digit_of[d] = static_cast<int>(model.need.size());
    model.need.push_back(static_cast<std::uint32_t>(flips));
    model.stride.push_back(model.states);
    model.states = saturating_mul(model.states, flips + 1);
  }
  return model;
}

std::vector<LiftOption> vote_options(std::span<const Candidate> vote,
                                     Candidate c, const LiftModel& model) {
  std::vector<LiftOption> options;
  const std::size_t pos = position_of(vote, c);
  std::uint64_t passed = 0;
  for (std::size_t above = pos + 1; above < vote.size(); ++above) {
    const int digit = model.digit_of[slot(vote[above])];
    // Stopping right after an adversary that needs nothing only adds cost.
    if (digit < 0) continue;
    passed |= std::uint64_t{1} << digit;
    options.push_back({static_cast<std::uint32_t>(above - pos), passed});
  }
  return options;
}

std::size_t step(std::size_t state, std::uint64_t passed,
                 const std::vector<std::uint32_t>& digits,
                 const LiftModel& model) {
  while (passed != 0) {
    const int j = std::countr_zero(passed);
    passed &= passed - 1;
    if (digits[j] > 0) state -= model.stride[j];
  }
  return state;
}

void check_budget(const LiftModel& model, std::size_t required,
                  std::size_t budget) {
  if (model.need.size() > 63 || required > budget) {
    throw BudgetExceeded("exact oracle needs " + std::to_string(required) +
                             " DP states, budget is " + std::to_string(budget),
                         required, budget);
  }
}

// Backward DP over votes, updated in place. After processing vote i,
// cost[s] is the cheapest way to settle residual s using votes i..n-1.
// Successor states are componentwise <= s, hence have a smaller index, so a
// descending sweep reads only values from the previous layer.
ExactSolution solve(const Election& e, Candidate c, ScoreMode mode,
                    std::size_t state_budget, bool want_lifts) {
  if (!e.contains(c)) throw InvalidInput("candidate out of range");
  const LiftModel model = build_model(e, c, mode);
  const std::size_t n = e.voters();
  check_budget(model, model.states, state_budget);
  if (want_lifts) {
    check_budget(model, saturating_mul(model.states, n), state_budget);
  }

  ExactSolution solution;
  if (model.need.empty()) {
    solution.lifts.assign(n, 0);
    return solution;
  }

  const std::size_t states = model.states;
  std::vector<std::uint32_t> cost(states, kUnreachable);
  cost[0] = 0;
  std::vector<std::uint16_t> choice;
  if (want_lifts) choice.assign(states * n, 0);
  std::vector<std::vector<LiftOption>> options(n);
  for (std::size_t i = 0; i < n; ++i) options[i] = vote_options(e.vote(i), c, model);

  std::vector<std::uint32_t> digits(model.need.size());
  for (std::size_t i = n; i-- > 0;) {
    const auto& opts = options[i];
    if (opts.empty()) continue;
    digits = model.need;
    for (std::size_t s = states; s-- > 0;) {
      std::uint32_t best = cost[s];
      std::uint16_t best_option = 0;
      for (std::size_t o = 0; o < opts.size(); ++o) {
        const std::uint32_t tail = cost[step(s, opts[o].passed, digits, model)];
        if (tail == kUnreachable) continue;
        if (tail + opts[o].lift < best) {
          best = tail + opts[o].lift;
          best_option = static_cast<std::uint16_t>(o + 1);
        }
      }
      cost[s] = best;
      if (want_lifts) choice[i * states + s] = best_option;
      // Decrement the mixed-radix digit vector to match s - 1.
      for (std::size_t j = 0; j < digits.size() && s > 0; ++j) {
        if (digits[j] > 0) {
          --digits[j];
          break;
        }
        digits[j] = model.need[j];
      }
    }
  }

  solution.score = cost[states - 1];
  if (want_lifts) {
    solution.lifts.assign(n, 0);
    std::size_t s = states - 1;
    digits = model.need;
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint16_t o = choice[i * states + s];
      if (o == 0) continue;
      const LiftOption& opt = options[i][o - 1];
      solution.lifts[i] = opt.lift;
      s = step(s, opt.passed, digits, model);
      for (std::uint64_t p = opt.passed; p != 0; p &= p - 1) {
        const int j = std::countr_zero(p);
        if (digits[j] > 0) --digits[j];
      }
    }
  }
  return solution;
}

std::size_t factorial(std::uint32_t m) {
  std::size_t f = 1;
  for (std::uint32_t k = 2; k <= m; ++k) f = saturating_mul(f, k);
  return f;
}

// Lexicographic rank of a permutation of 0..m-1.
std::size_t perm_rank(const std::vector<std::uint32_t>& perm) {
  std::size_t rank = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[j] < perm[i]) ++smaller;
    }
    rank = rank * (perm.size() - i) + smaller;
  }
  return rank;
}

}  // namespace

std::string_view to_string(ScoreMode mode) {
  return mode == ScoreMode::strict ? "strict" : "tie-or-beat";
}

std::optional<ScoreMode> parse_score_mode(std::string_view text) {
  if (text == "strict") return ScoreMode::strict;
  if (text == "tie-or-beat") return ScoreMode::tie_or_beat;
  return std::nullopt;
}

std::int64_t required_flips(std::int64_t deficit, ScoreMode mode) {
  if (mode == ScoreMode::strict) return deficit < 0 ? 0 : deficit / 2 + 1;
  return deficit <= 0 ? 0 : (deficit + 1) / 2;
}

std::int64_t lift_cost(const LiftAssignment& lifts) {
  return std::accumulate(lifts.begin(), lifts.end(), std::int64_t{0});
}

Election apply_lifts(const Election& e, Candidate c,
                     const LiftAssignment& lifts) {
  if (lifts.size() != e.voters()) {
    throw InvalidInput("lift assignment length differs from voter count");
  }
  const std::uint32_t m = e.candidates();
  std::vector<Candidate> flat;
  flat.reserve(e.voters() * m);
  for (std::size_t i = 0; i < e.voters(); ++i) {
    auto v = e.vote(i);
    const std::size_t pos = position_of(v, c);
    if (pos + lifts[i] >= m) throw InvalidInput("lift moves candidate past the top");
    std::vector<Candidate> moved(v.begin(), v.end());
    std::rotate(moved.begin() + pos, moved.begin() + pos + 1,
                moved.begin() + pos + lifts[i] + 1);
    flat.insert(flat.end(), moved.begin(), moved.end());
  }
  return Election::from_flat(m, std::move(flat));
}

std::size_t dp_state_count(const Election& e, Candidate c, ScoreMode mode) {
  return build_model(e, c, mode).states;
}

std::int64_t exact_dodgson_score(const Election& e, Candidate c, ScoreMode mode,
                                 std::size_t state_budget) {
  return solve(e, c, mode, state_budget, false).score;
}

ExactSolution exact_dodgson_solution(const Election& e, Candidate c,
                                     ScoreMode mode, std::size_t state_budget) {
  return solve(e, c, mode, state_budget, true);
}

std::size_t profile_count(std::uint32_t m, std::size_t n) {
  const std::size_t base = factorial(m);
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total = saturating_mul(total, base);
  return total;
}

std::int64_t bfs_swap_score(const Election& e, Candidate c, ScoreMode mode,
                            std::size_t profile_budget) {
  if (!e.contains(c)) throw InvalidInput("candidate out of range");
  const std::uint32_t m = e.candidates();
  const std::size_t n = e.voters();
  // Depth 0 needs no search, so it is answered whatever the budget.
  const PairwiseStats stats = pairwise_stats(e, c);
  bool already_there = true;
  for (std::uint32_t d = 0; d < m; ++d) {
    if (d != slot(c) && required_flips(stats.deficit[d], mode) > 0) {
      already_there = false;
    }
  }
  if (already_there) return 0;
  const std::size_t total = profile_count(m, n);
  if (total > profile_budget) {
    throw BudgetExceeded("BFS oracle needs " + std::to_string(total) +
                             " profile states, budget is " +
                             std::to_string(profile_budget),
                         total, profile_budget);
  }

  // Enumerate the m! votes in lexicographic order so that index == rank.
  const std::size_t kinds = factorial(m);
  std::vector<std::uint32_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0u);
  std::vector<std::vector<std::size_t>> neighbour(kinds);
  std::vector<std::vector<bool>> c_over(kinds);  // [kind][d]: c preferred to d
  for (std::size_t k = 0; k < kinds; ++k) {
    c_over[k].assign(m, false);
    bool past_c = false;
    for (std::uint32_t p = 0; p < m; ++p) {
      if (perm[p] == slot(c)) {
        past_c = true;
      } else if (!past_c) {
        c_over[k][perm[p]] = true;
      }
    }
    for (std::uint32_t p = 0; p + 1 < m; ++p) {
      std::vector<std::uint32_t> swapped = perm;
      std::swap(swapped[p], swapped[p + 1]);
      neighbour[k].push_back(perm_rank(swapped));
    }
    std::next_permutation(perm.begin(), perm.end());
  }

  std::vector<std::size_t> power(n, 1);
  for (std::size_t i = 1; i < n; ++i) power[i] = power[i - 1] * kinds;

  auto kinds_of = [&](std::size_t code, std::vector<std::size_t>& out) {
    for (std::size_t i = 0; i < n; ++i) {
      out[i] = code % kinds;
      code /= kinds;
    }
  };
  std::vector<std::int64_t> wins(m);
  auto is_goal = [&](const std::vector<std::size_t>& profile) {
    std::fill(wins.begin(), wins.end(), 0);
    for (std::size_t kind : profile) {
      for (std::uint32_t d = 0; d < m; ++d) wins[d] += c_over[kind][d];
    }
    for (std::uint32_t d = 0; d < m; ++d) {
      if (d == slot(c)) continue;
      const std::int64_t margin = 2 * wins[d] - static_cast<std::int64_t>(n);
      if (mode == ScoreMode::strict ? margin <= 0 : margin < 0) return false;
    }
    return true;
  };

  std::vector<std::size_t> profile(n);
  std::size_t start = 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto v = e.vote(i);
    std::vector<std::uint32_t> p(m);
    for (std::uint32_t j = 0; j < m; ++j) p[j] = slot(v[j]);
    start += perm_rank(p) * power[i];
  }

  std::vector<bool> seen(total, false);
  std::vector<std::size_t> frontier{start}, next;
  seen[start] = true;
  for (std::int64_t depth = 0; !frontier.empty(); ++depth) {
    next.clear();
    for (std::size_t code : frontier) {
      kinds_of(code, profile);
      if (is_goal(profile)) return depth;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t to : neighbour[profile[i]]) {
          const std::size_t moved = code - profile[i] * power[i] + to * power[i];
          if (!seen[moved]) {
            seen[moved] = true;
            next.push_back(moved);
          }
        }
      }
    }
    frontier.swap(next);
  }
  // Unreachable: c on top of every vote is always a goal profile.
  throw std::logic_error("BFS exhausted the profile space without a goal");
}

std::vector<Candidate> dodgson_winners(const Election& e, ScoreMode mode,
                                       std::size_t state_budget) {
  std::vector<std::int64_t> scores;
  for (Candidate c : e.all_candidates()) {
    scores.push_back(exact_dodgson_score(e, c, mode, state_budget));
  }
  const std::int64_t best = *std::min_element(scores.begin(), scores.end());
  std::vector<Candidate> winners;
  for (Candidate c : e.all_candidates()) {
    if (scores[slot(c)] == best) winners.push_back(c);
  }
  return winners;
}

}  // namespace dodgson
