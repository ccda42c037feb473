#include "dodgson/sampler.hpp"

#include <algorithm>
#include <numeric>

namespace dodgson {

namespace {

__extension__ using u128 = unsigned __int128;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void check_config(const SamplerConfig& cfg) {
  if (cfg.m == 0) throw InvalidInput("sampler needs m >= 1");
  if (cfg.n == 0) throw InvalidInput("sampler needs n >= 1");
}

}  // namespace

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t trial) {
  return splitmix64(splitmix64(seed) ^ splitmix64(~trial));
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  u128 product = static_cast<u128>(rng()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      product = static_cast<u128>(rng()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

void random_vote(std::mt19937_64& rng, std::span<Candidate> out) {
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = Candidate(static_cast<std::uint32_t>(i + 1));
  }
  for (std::size_t i = out.size(); i > 1; --i) {
    std::swap(out[i - 1], out[uniform_below(rng, i)]);
  }
}

Election sample_election(const SamplerConfig& cfg) {
  check_config(cfg);
  std::mt19937_64 rng(cfg.seed);
  std::vector<Candidate> flat(cfg.n * cfg.m);
  std::span<Candidate> all(flat);
  for (std::size_t i = 0; i < cfg.n; ++i) {
    random_vote(rng, all.subspan(i * cfg.m, cfg.m));
  }
  return Election::from_flat(cfg.m, std::move(flat));
}

Election sample_trial(const SamplerConfig& cfg, std::uint64_t trial) {
  return sample_election({cfg.m, cfg.n, substream_seed(cfg.seed, trial)});
}

std::vector<Election> sample_stream(const SamplerConfig& cfg,
                                    std::uint64_t trials) {
  if (trials == 0) throw InvalidInput("sample_stream needs trials >= 1");
  std::vector<Election> out;
  out.reserve(trials);
  for (std::uint64_t t = 0; t < trials; ++t) out.push_back(sample_trial(cfg, t));
  return out;
}

void for_each_profile(std::uint32_t m, std::size_t n,
                      const std::function<void(const Election&)>& visit) {
  if (m == 0 || n == 0) throw InvalidInput("profiles need m >= 1 and n >= 1");
  std::vector<std::vector<Candidate>> kinds;
  std::vector<Candidate> perm(m);
  for (std::uint32_t i = 0; i < m; ++i) perm[i] = Candidate(i + 1);
  do {
    kinds.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<std::size_t> odometer(n, 0);
  std::vector<Candidate> flat(n * m);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) {
      std::copy(kinds[odometer[i]].begin(), kinds[odometer[i]].end(),
                flat.begin() + static_cast<std::ptrdiff_t>(i * m));
    }
    visit(Election::from_flat(m, flat));
    std::size_t i = 0;
    while (i < n && ++odometer[i] == kinds.size()) odometer[i++] = 0;
    if (i == n) return;
  }
}

}  // namespace dodgson
