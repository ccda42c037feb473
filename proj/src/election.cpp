#include "dodgson/election.hpp"

#include <algorithm>
#include <string>

namespace dodgson {

namespace {

void check_permutation(std::span<const Candidate> ranking, std::uint32_t m) {
  if (ranking.size() != m) {
    throw InvalidInput("vote has " + std::to_string(ranking.size()) +
                       " entries, expected " + std::to_string(m));
  }
  std::vector<bool> seen(m, false);
  for (Candidate c : ranking) {
    if (c.index < 1 || c.index > m) {
      throw InvalidInput("candidate " + std::to_string(c.index) +
                         " out of range 1.." + std::to_string(m));
    }
    if (seen[slot(c)]) {
      throw InvalidInput("candidate " + std::to_string(c.index) +
                         " appears twice in one vote");
    }
    seen[slot(c)] = true;
  }
}

}  // namespace

Vote::Vote(std::vector<Candidate> ascending) : ranking_(std::move(ascending)) {
  if (ranking_.empty()) throw InvalidInput("vote must rank at least one candidate");
  check_permutation(ranking_, static_cast<std::uint32_t>(ranking_.size()));
}

Vote Vote::from_most_preferred_first(std::vector<Candidate> descending) {
  std::reverse(descending.begin(), descending.end());
  return Vote(std::move(descending));
}

Election::Election(std::uint32_t m, const std::vector<Vote>& votes) : m_(m) {
  if (m == 0) throw InvalidInput("an election needs at least one candidate");
  if (votes.empty()) throw InvalidInput("an election needs at least one vote");
  flat_.reserve(votes.size() * m);
  for (const Vote& v : votes) {
    if (v.size() != m) {
      throw InvalidInput("vote has " + std::to_string(v.size()) +
                         " entries, expected " + std::to_string(m));
    }
    flat_.insert(flat_.end(), v.ranking().begin(), v.ranking().end());
  }
}

Election::Election(std::uint32_t m, std::vector<Candidate> flat, bool)
    : m_(m), flat_(std::move(flat)) {}

Election Election::from_flat(std::uint32_t m, std::vector<Candidate> flat) {
  if (m == 0) throw InvalidInput("an election needs at least one candidate");
  if (flat.empty()) throw InvalidInput("an election needs at least one vote");
  if (flat.size() % m != 0) {
    throw InvalidInput("flat vote buffer is not a multiple of m");
  }
  std::span<const Candidate> all(flat);
  for (std::size_t off = 0; off < all.size(); off += m) {
    check_permutation(all.subspan(off, m), m);
  }
  return Election(m, std::move(flat), true);
}

std::vector<Candidate> Election::all_candidates() const {
  std::vector<Candidate> out;
  out.reserve(m_);
  for (std::uint32_t i = 1; i <= m_; ++i) out.emplace_back(i);
  return out;
}

DodgsonTriple::DodgsonTriple(Election e, Candidate c)
    : election(std::move(e)), candidate(c) {
  if (!election.contains(candidate)) {
    throw InvalidInput("candidate " + std::to_string(c.index) +
                       " out of range 1.." +
                       std::to_string(election.candidates()));
  }
}

std::size_t position_of(std::span<const Candidate> vote, Candidate c) {
  return static_cast<std::size_t>(std::find(vote.begin(), vote.end(), c) -
                                  vote.begin());
}

PairwiseStats pairwise_stats(const Election& e, Candidate c) {
  const std::uint32_t m = e.candidates();
  PairwiseStats stats;
  stats.candidate = c;
  stats.voters = e.voters();
  stats.deficit.assign(m, 0);
  stats.swaps.assign(m, 0);

  for (std::size_t i = 0; i < stats.voters; ++i) {
    auto v = e.vote(i);
    std::size_t pos = 0;
    // Everything below c is a pairwise vote for c.
    for (; v[pos] != c; ++pos) --stats.deficit[slot(v[pos])];
    if (pos + 1 < m) {
      ++stats.swaps[slot(v[pos + 1])];
    } else {
      ++stats.top_count;
    }
    for (++pos; pos < m; ++pos) ++stats.deficit[slot(v[pos])];
  }
  return stats;
}

std::optional<Candidate> condorcet_winner(const Election& e) {
  for (Candidate c : e.all_candidates()) {
    const PairwiseStats stats = pairwise_stats(e, c);
    bool beats_all = true;
    for (std::uint32_t d = 0; d < e.candidates() && beats_all; ++d) {
      if (d != slot(c) && stats.deficit[d] >= 0) beats_all = false;
    }
    if (beats_all) return c;
  }
  return std::nullopt;
}

}  // namespace dodgson
