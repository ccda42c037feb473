#include <algorithm>
#include <chrono>
#include <random>

#include "catch2/catch_amalgamated.hpp"

#include "dodgson/greedy.hpp"
#include "dodgson/oracle.hpp"
#include "support.hpp"

using namespace dodgson;
using namespace dodgson::testing;

namespace {

GreedyScoreResult definitely(std::int64_t s) { return {s, Confidence::definitely}; }
GreedyScoreResult maybe(std::int64_t s) { return {s, Confidence::maybe}; }

}  // namespace

TEST_CASE("greedy score golden values", "[greedy]") {
  CHECK(greedy_score(sixty_forty(), letter('d')) == definitely(0));
  // Deficits 20/20/-20 against b/c/d and no vote with c right above a:
  // 11 + 11 plus one for the saturated adversary. The true score is 22.
  CHECK(greedy_score(five_types(), letter('a')) == maybe(23));
  CHECK(greedy_score(ascending(1, {{5, "a"}}), Candidate(1)) == definitely(0));
  CHECK(greedy_score(ascending(2, {{2, "ab"}}), letter('a')) == definitely(2));
}

TEST_CASE("greedy score in the 60/40 election for every candidate", "[greedy]") {
  const Election e = sixty_forty();
  // c=a: deficit 20 against c and d with no adjacent votes, 100 against b.
  CHECK(greedy_score(e, letter('a')) == maybe(51 + 11 + 1 + 11 + 1));
  CHECK(greedy_score(e, letter('b')).confidence == Confidence::maybe);
  CHECK(greedy_score(e, letter('c')).confidence == Confidence::definitely);
}

TEST_CASE("greedy score matches the closed form over brute tallies", "[greedy]") {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 500; ++round) {
    const auto m = static_cast<std::uint32_t>(1 + rng() % 6);
    const Election e = random_election(rng, m, 1 + rng() % 20);
    for (Candidate c : e.all_candidates()) {
      const auto [score, sure] = closed_form_greedy(e, c);
      const GreedyScoreResult r = greedy_score(e, c);
      REQUIRE(r.score == score);
      REQUIRE((r.confidence == Confidence::definitely) == sure);
    }
  }
}

TEST_CASE("definitely answers are exact on every small profile", "[greedy][exhaustive]") {
  for (std::size_t n = 1; n <= 3; ++n) {
    all_profiles(3, n, [](const Election& e) {
      for (Candidate c : e.all_candidates()) {
        const GreedyScoreResult r = greedy_score(e, c);
        if (r.confidence == Confidence::definitely) {
          REQUIRE(r.score == bfs_swap_score(e, c));
        }
      }
    });
  }
}

TEST_CASE("definitely answers are exact on random samples", "[greedy]") {
  std::mt19937_64 rng(23);
  int checked = 0;
  for (int round = 0; round < 400; ++round) {
    const auto m = static_cast<std::uint32_t>(2 + rng() % 4);
    const Election e = random_election(rng, m, 1 + rng() % 9);
    for (Candidate c : e.all_candidates()) {
      const GreedyScoreResult r = greedy_score(e, c);
      if (r.confidence != Confidence::definitely) continue;
      REQUIRE(r.score == exact_dodgson_score(e, c));
      ++checked;
    }
    const auto winners = dodgson_winners(e);
    for (Candidate c : e.all_candidates()) {
      const GreedyWinnerResult w = greedy_winner(e, c);
      if (w.confidence != Confidence::definitely) continue;
      REQUIRE(w.winner == std::binary_search(winners.begin(), winners.end(), c));
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("tally conditions force a definitely answer", "[greedy]") {
  std::mt19937_64 rng(29);
  int hit = 0;
  for (int round = 0; round < 2000; ++round) {
    const auto m = static_cast<std::uint32_t>(2 + rng() % 3);
    const std::size_t n = 1 + rng() % 60;
    const Election e = random_election(rng, m, n);
    const auto mm = static_cast<std::int64_t>(m);
    const auto nn = static_cast<std::int64_t>(n);
    for (Candidate c : e.all_candidates()) {
      bool holds = true;
      for (Candidate d : e.all_candidates()) {
        if (d == c) continue;
        const Tally t = tally(e, c, d);
        holds = holds && 4 * mm * t.d_over_c <= 2 * mm * nn + nn &&
                4 * mm * t.adjacent >= 3 * nn;
      }
      if (!holds) continue;
      ++hit;
      REQUIRE(greedy_score(e, c).confidence == Confidence::definitely);
    }
  }
  CHECK(hit > 50);
}

TEST_CASE("greedy score ignores vote order", "[greedy]") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 100; ++round) {
    const Election e = random_election(rng, 4, 7);
    std::vector<Vote> votes;
    for (std::size_t i = 0; i < e.voters(); ++i) {
      auto v = e.vote(i);
      votes.emplace_back(std::vector<Candidate>(v.begin(), v.end()));
    }
    std::shuffle(votes.begin(), votes.end(), rng);
    const Election permuted(4, votes);
    for (Candidate c : e.all_candidates()) {
      REQUIRE(greedy_score(e, c) == greedy_score(permuted, c));
    }
  }
}

TEST_CASE("greedy winner", "[greedy]") {
  // a and b come back maybe, so the overall answer is maybe even though d
  // itself scores a definite 0.
  CHECK(greedy_winner(sixty_forty(), letter('d')) ==
        GreedyWinnerResult{true, Confidence::maybe});
  CHECK(greedy_winner(cycle(), letter('a')) ==
        GreedyWinnerResult{true, Confidence::definitely});
  CHECK(greedy_winner(ascending(1, {{1, "a"}}), Candidate(1)) ==
        GreedyWinnerResult{true, Confidence::definitely});
  CHECK(greedy_winner(ascending(2, {{2, "ab"}}), letter('a')) ==
        GreedyWinnerResult{false, Confidence::definitely});
  // Equal greedy scores keep the answer at yes.
  const Election tie = ascending(2, {{1, "ab"}, {1, "ba"}});
  CHECK(greedy_winner(tie, letter('a')).winner);
  CHECK(greedy_winner(tie, letter('b')).winner);
}

TEST_CASE("greedy winner is maybe iff some candidate's score is maybe", "[greedy]") {
  std::mt19937_64 rng(37);
  for (int round = 0; round < 300; ++round) {
    const Election e = random_election(rng, static_cast<std::uint32_t>(2 + rng() % 4),
                                       1 + rng() % 12);
    bool any_maybe = false;
    for (Candidate c : e.all_candidates()) {
      any_maybe |= greedy_score(e, c).confidence == Confidence::maybe;
    }
    for (Candidate c : e.all_candidates()) {
      REQUIRE((greedy_winner(e, c).confidence == Confidence::maybe) == any_maybe);
    }
  }
}

TEST_CASE("greedy all winners", "[greedy]") {
  const GreedyWinnersResult sf = greedy_all_winners(sixty_forty());
  CHECK(sf.winners == std::vector<Candidate>{letter('d')});
  CHECK(sf.confidence == Confidence::maybe);

  const GreedyWinnersResult cy = greedy_all_winners(cycle());
  CHECK(cy.winners == std::vector<Candidate>{letter('a'), letter('b'), letter('c')});
  CHECK(cy.scores == std::vector<std::int64_t>{1, 1, 1});
  CHECK(cy.confidence == Confidence::definitely);

  const GreedyWinnersResult one = greedy_all_winners(ascending(1, {{3, "a"}}));
  CHECK(one.winners == std::vector<Candidate>{Candidate(1)});
  CHECK(one.confidence == Confidence::definitely);
}

TEST_CASE("greedy all winners agrees with per-candidate greedy winner", "[greedy]") {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 200; ++round) {
    const Election e = random_election(rng, static_cast<std::uint32_t>(1 + rng() % 5),
                                       1 + rng() % 10);
    const GreedyWinnersResult all = greedy_all_winners(e);
    for (Candidate c : e.all_candidates()) {
      const GreedyWinnerResult one = greedy_winner(e, c);
      REQUIRE(one.confidence == all.confidence);
      REQUIRE(one.winner == std::binary_search(all.winners.begin(), all.winners.end(), c));
    }
    if (all.confidence == Confidence::definitely && e.candidates() <= 5) {
      REQUIRE(all.winners == dodgson_winners(e));
    }
  }
}
