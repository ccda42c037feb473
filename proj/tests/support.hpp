#pragma once

// Test-only helpers and independent reference computations. Nothing here
// calls into the library's scoring code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dodgson/election.hpp"

namespace dodgson::testing {

// Candidates written as letters, a = 1. Each string lists one vote
// least-preferred first, the way the worked examples in the literature do.
inline Election ascending(std::uint32_t m,
                          const std::vector<std::pair<int, std::string>>& groups) {
  std::vector<Vote> votes;
  for (const auto& [count, order] : groups) {
    std::vector<Candidate> ranking;
    for (char ch : order) ranking.emplace_back(static_cast<std::uint32_t>(ch - 'a' + 1));
    for (int k = 0; k < count; ++k) votes.emplace_back(ranking);
  }
  return Election(m, votes);
}

inline Candidate letter(char ch) { return Candidate(static_cast<std::uint32_t>(ch - 'a' + 1)); }

// 60 x (a,b,c,d) and 40 x (c,d,a,b): d is the Condorcet winner.
inline Election sixty_forty() { return ascending(4, {{60, "abcd"}, {40, "cdab"}}); }

// Twenty votes each of five orders; a's Dodgson score is 22.
inline Election five_types() {
  return ascending(4, {{20, "abcd"}, {20, "bcda"}, {20, "cdab"}, {20, "badc"}, {20, "dabc"}});
}

inline Election cycle() { return ascending(3, {{1, "abc"}, {1, "bca"}, {1, "cab"}}); }

// True iff d is preferred to c in the ascending vote, straight from positions.
inline bool prefers(std::span<const Candidate> v, Candidate d, Candidate c) {
  std::size_t pc = 0, pd = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == c) pc = k;
    if (v[k] == d) pd = k;
  }
  return pd > pc;
}

inline bool directly_above(std::span<const Candidate> v, Candidate d, Candidate c) {
  for (std::size_t k = 0; k + 1 < v.size(); ++k) {
    if (v[k] == c) return v[k + 1] == d;
  }
  return false;
}

struct Tally {
  std::int64_t d_over_c = 0;
  std::int64_t c_over_d = 0;
  std::int64_t adjacent = 0;  // d immediately above c
};

inline Tally tally(const Election& e, Candidate c, Candidate d) {
  Tally t;
  for (std::size_t i = 0; i < e.voters(); ++i) {
    auto v = e.vote(i);
    if (prefers(v, d, c)) {
      ++t.d_over_c;
    } else {
      ++t.c_over_d;
    }
    if (directly_above(v, d, c)) ++t.adjacent;
  }
  return t;
}

// The greedy score written as a closed form over brute-force tallies:
// sum over d with deficit >= 0 of floor(deficit/2)+1, plus one for each d
// with deficit >= 2*adjacent. `definitely` iff no such saturated d exists.
inline std::pair<std::int64_t, bool> closed_form_greedy(const Election& e, Candidate c) {
  std::int64_t score = 0;
  bool definitely = true;
  for (Candidate d : e.all_candidates()) {
    if (d == c) continue;
    const Tally t = tally(e, c, d);
    const std::int64_t deficit = t.d_over_c - t.c_over_d;
    if (deficit >= 0) score += deficit / 2 + 1;
    if (deficit >= 2 * t.adjacent) {
      score += 1;
      definitely = false;
    }
  }
  return {score, definitely};
}

// Minimum lift cost by trying every lift vector. Independent of the DP:
// it rebuilds each lifted profile and checks pairwise majorities directly.
inline std::int64_t brute_force_lift_score(const Election& e, Candidate c, bool strict) {
  const std::uint32_t m = e.candidates();
  const std::size_t n = e.voters();
  std::vector<std::size_t> room(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto v = e.vote(i);
    std::size_t pos = 0;
    while (v[pos] != c) ++pos;
    room[i] = m - 1 - pos;
  }
  std::vector<std::size_t> lifts(n, 0);
  std::int64_t best = -1;
  while (true) {
    std::int64_t cost = 0;
    for (auto l : lifts) cost += static_cast<std::int64_t>(l);
    if (best < 0 || cost < best) {
      bool ok = true;
      for (Candidate d : e.all_candidates()) {
        if (d == c) continue;
        std::int64_t c_wins = 0;
        for (std::size_t i = 0; i < n; ++i) {
          auto v = e.vote(i);
          std::size_t pc = 0, pd = 0;
          for (std::size_t k = 0; k < m; ++k) {
            if (v[k] == c) pc = k;
            if (v[k] == d) pd = k;
          }
          if (pc + lifts[i] >= pd) ++c_wins;
        }
        const std::int64_t margin = 2 * c_wins - static_cast<std::int64_t>(n);
        if (strict ? margin <= 0 : margin < 0) ok = false;
      }
      if (ok) best = cost;
    }
    std::size_t i = 0;
    while (i < n && lifts[i] == room[i]) lifts[i++] = 0;
    if (i == n) return best;
    ++lifts[i];
  }
}

// Random election drawn with std::shuffle; separate from the library sampler.
inline Election random_election(std::mt19937_64& rng, std::uint32_t m, std::size_t n) {
  std::vector<Vote> votes;
  std::vector<Candidate> base;
  for (std::uint32_t k = 1; k <= m; ++k) base.emplace_back(k);
  for (std::size_t i = 0; i < n; ++i) {
    std::shuffle(base.begin(), base.end(), rng);
    votes.emplace_back(base);
  }
  return Election(m, votes);
}

// All (m!)^n profiles; independent of the library's enumerator.
inline void all_profiles(std::uint32_t m, std::size_t n,
                         const std::function<void(const Election&)>& visit) {
  std::vector<std::vector<Candidate>> kinds;
  std::vector<Candidate> perm;
  for (std::uint32_t k = 1; k <= m; ++k) perm.emplace_back(k);
  do kinds.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    std::vector<Vote> votes;
    for (auto k : idx) votes.emplace_back(kinds[k]);
    visit(Election(m, votes));
    std::size_t i = 0;
    while (i < n && ++idx[i] == kinds.size()) idx[i++] = 0;
    if (i == n) return;
  }
}

}  // namespace dodgson::testing
