#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "dodgson/election.hpp"

namespace dodgson {

struct SamplerConfig {
  std::uint32_t m = 1;
  std::size_t n = 1;
  std::uint64_t seed = 0;
};

// Seed of trial `trial` within the stream keyed by `seed`. Any trial can be
// regenerated on its own from (seed, trial).
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t trial);

// Uniform integer in [0, bound) with no modulo bias (Lemire's multiply and
// reject). Stable across standard library implementations, unlike
// std::uniform_int_distribution.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

// Fisher-Yates shuffle of 1..m, ascending-preference order.
void random_vote(std::mt19937_64& rng, std::span<Candidate> out);

// n independent uniform votes over all m! orders. The engine is seeded with
// cfg.seed directly.
Election sample_election(const SamplerConfig& cfg);

// Trial i of the stream: sample_election with seed substream_seed(cfg.seed, i).
Election sample_trial(const SamplerConfig& cfg, std::uint64_t trial);

std::vector<Election> sample_stream(const SamplerConfig& cfg,
                                    std::uint64_t trials);

// Visits all (m!)^n profiles in a fixed order, each exactly once. Votes cycle
// through the m! orders in lexicographic order, vote 0 fastest.
void for_each_profile(std::uint32_t m, std::size_t n,
                      const std::function<void(const Election&)>& visit);

}  // namespace dodgson
