#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dodgson/errors.hpp"

namespace dodgson {

// A candidate label in 1..m of its enclosing election.
struct Candidate {
  std::uint32_t index = 0;

  constexpr Candidate() = default;
  constexpr explicit Candidate(std::uint32_t i) : index(i) {}

  friend constexpr auto operator<=>(Candidate, Candidate) = default;
};

// Offset of a candidate into 0-based per-candidate arrays.
constexpr std::size_t slot(Candidate c) { return c.index - 1; }

// One voter's strict total order. Stored ascending: ranking()[0] is the least
// preferred candidate and ranking().back() the most preferred.
class Vote {
 public:
  // Validates that `ascending` is a permutation of 1..size().
  explicit Vote(std::vector<Candidate> ascending);

  static Vote from_most_preferred_first(std::vector<Candidate> descending);

  std::size_t size() const noexcept { return ranking_.size(); }
  std::span<const Candidate> ranking() const noexcept { return ranking_; }

  friend bool operator==(const Vote&, const Vote&) = default;

 private:
  std::vector<Candidate> ranking_;
};

// A Dodgson election: m >= 1 candidates and an ordered list of n >= 1 votes.
// Votes are kept in one flat ascending-order buffer of n*m labels.
class Election {
 public:
  Election(std::uint32_t m, const std::vector<Vote>& votes);

  // Takes n*m labels, vote after vote, each vote in ascending order.
  // Every vote is validated.
  static Election from_flat(std::uint32_t m, std::vector<Candidate> flat);

  std::uint32_t candidates() const noexcept { return m_; }
  std::size_t voters() const noexcept { return flat_.size() / m_; }

  std::span<const Candidate> vote(std::size_t i) const noexcept {
    return std::span<const Candidate>(flat_).subspan(i * m_, m_);
  }

  bool contains(Candidate c) const noexcept {
    return c.index >= 1 && c.index <= m_;
  }

  std::vector<Candidate> all_candidates() const;

  friend bool operator==(const Election&, const Election&) = default;

 private:
  Election(std::uint32_t m, std::vector<Candidate> flat, bool);

  std::uint32_t m_;
  std::vector<Candidate> flat_;
};

// An election together with a distinguished candidate.
struct DodgsonTriple {
  Election election;
  Candidate candidate;

  DodgsonTriple(Election e, Candidate c);

  friend bool operator==(const DodgsonTriple&, const DodgsonTriple&) = default;
};

// Per-adversary tallies against a fixed candidate c, as gathered by the
// counting loop of the greedy heuristic.
//
//   deficit(d) = #{votes preferring d to c} - #{votes preferring c to d}
//   swaps(d)   = #{votes in which d sits immediately above c}
//
// Entries for c itself are zero and carry no meaning.
struct PairwiseStats {
  Candidate candidate;
  std::size_t voters = 0;
  std::vector<std::int64_t> deficit;  // indexed by slot(d)
  std::vector<std::int64_t> swaps;    // indexed by slot(d)
  std::int64_t top_count = 0;         // votes where c is most preferred

  std::int64_t deficit_of(Candidate d) const { return deficit[slot(d)]; }
  std::int64_t swaps_of(Candidate d) const { return swaps[slot(d)]; }

  // #{votes in which d is preferred to c}.
  std::int64_t preferring(Candidate d) const {
    return (static_cast<std::int64_t>(voters) + deficit[slot(d)]) / 2;
  }
};

// Single pass over the votes. Requires e.contains(c).
PairwiseStats pairwise_stats(const Election& e, Candidate c);
inline PairwiseStats pairwise_stats(const DodgsonTriple& t) {
  return pairwise_stats(t.election, t.candidate);
}

std::optional<Candidate> condorcet_winner(const Election& e);

// Position (0 = least preferred) of c in an ascending vote.
std::size_t position_of(std::span<const Candidate> vote, Candidate c);

}  // namespace dodgson
