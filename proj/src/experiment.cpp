#include "dodgson/experiment.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <thread>

#include "dodgson/greedy.hpp"
#include "dodgson/sampler.hpp"

namespace dodgson {

namespace {

void check_params(const BoundParams& p) {
  if (p.m == 0 || p.n == 0) throw InvalidInput("bounds need m >= 1 and n >= 1");
}

double exponent_term(const BoundParams& p) {
  const double m = p.m;
  return std::exp(-static_cast<double>(p.n) / (8.0 * m * m));
}

}  // namespace

double bound_winner(const BoundParams& p) {
  check_params(p);
  const double m = p.m;
  return 2.0 * (m * m - m) * exponent_term(p);
}

double bound_pair(const BoundParams& p) {
  check_params(p);
  if (p.m < 2) throw InvalidInput("pair bound needs m >= 2");
  return 2.0 * exponent_term(p);
}

bool pair_condition_holds(const PairwiseStats& stats, Candidate d) {
  if (d == stats.candidate) throw InvalidInput("pair condition needs d != c");
  const auto m = static_cast<std::int64_t>(stats.deficit.size());
  const auto n = static_cast<std::int64_t>(stats.voters);
  const std::int64_t preferring_d = stats.preferring(d);
  const std::int64_t adjacent = stats.swaps_of(d);
  return 4 * m * preferring_d <= 2 * m * n + n && 4 * m * adjacent >= 3 * n;
}

bool pair_condition_holds(const Election& e, Candidate c, Candidate d) {
  if (!e.contains(c) || !e.contains(d)) throw InvalidInput("candidate out of range");
  return pair_condition_holds(pairwise_stats(e, c), d);
}

double ExperimentReport::maybe_freq() const {
  return trials == 0 ? 0.0 : static_cast<double>(maybe_count) / trials;
}

double ExperimentReport::pairfail_freq() const {
  return trials == 0 ? 0.0 : static_cast<double>(pairfail_count) / trials;
}

bool ExperimentReport::same_counts(const ExperimentReport& o) const {
  return m == o.m && n == o.n && trials == o.trials && seed == o.seed &&
         oracle == o.oracle && exhaustive == o.exhaustive &&
         maybe_count == o.maybe_count && pairfail_count == o.pairfail_count &&
         mismatch_count == o.mismatch_count &&
         implication_failures == o.implication_failures &&
         pair_fail_counts == o.pair_fail_counts &&
         bound_winner == o.bound_winner && bound_pair == o.bound_pair;
}

TrialOutcome evaluate_trial(const Election& e, const ExperimentOptions& options) {
  const std::uint32_t m = e.candidates();
  TrialOutcome out;
  out.pair_fail.assign(static_cast<std::size_t>(m) * m, false);

  for (Candidate c : e.all_candidates()) {
    const PairwiseStats stats = pairwise_stats(e, c);
    for (Candidate d : e.all_candidates()) {
      if (d == c || pair_condition_holds(stats, d)) continue;
      out.pair_fail[slot(c) * m + slot(d)] = true;
      out.pairfail = true;
    }
  }

  std::vector<GreedyWinnerResult> answers;
  answers.reserve(m);
  for (Candidate c : e.all_candidates()) {
    answers.push_back(greedy_winner(e, c));
    if (answers.back().confidence == Confidence::maybe) out.maybe = true;
  }
  out.implication_failure = !out.pairfail && out.maybe;

  if (options.oracle) {
    std::vector<bool> is_winner(m, false);
    bool computed = false;
    for (Candidate c : e.all_candidates()) {
      const GreedyWinnerResult& answer = answers[slot(c)];
      if (answer.confidence != Confidence::definitely) continue;
      if (!computed) {
        for (Candidate w : dodgson_winners(e, ScoreMode::strict,
                                           options.oracle_budget)) {
          is_winner[slot(w)] = true;
        }
        computed = true;
      }
      if (answer.winner != is_winner[slot(c)]) out.mismatch = true;
    }
  }
  return out;
}

ExperimentReport empty_report(const BoundParams& p,
                              const ExperimentOptions& options) {
  ExperimentReport report;
  report.m = p.m;
  report.n = p.n;
  report.seed = options.seed;
  report.oracle = options.oracle;
  report.exhaustive = options.exhaustive;
  report.pair_fail_counts.assign(static_cast<std::size_t>(p.m) * p.m, 0);
  report.bound_winner = bound_winner(p);
  if (p.m >= 2) report.bound_pair = bound_pair(p);
  return report;
}

void accumulate(ExperimentReport& report, const TrialOutcome& outcome) {
  ++report.trials;
  report.maybe_count += outcome.maybe;
  report.pairfail_count += outcome.pairfail;
  report.mismatch_count += outcome.mismatch;
  report.implication_failures += outcome.implication_failure;
  for (std::size_t k = 0; k < outcome.pair_fail.size(); ++k) {
    report.pair_fail_counts[k] += outcome.pair_fail[k];
  }
}

void merge(ExperimentReport& into, const ExperimentReport& part) {
  into.trials += part.trials;
  into.maybe_count += part.maybe_count;
  into.pairfail_count += part.pairfail_count;
  into.mismatch_count += part.mismatch_count;
  into.implication_failures += part.implication_failures;
  for (std::size_t k = 0; k < part.pair_fail_counts.size(); ++k) {
    into.pair_fail_counts[k] += part.pair_fail_counts[k];
  }
}

std::size_t worst_case_dp_states(const BoundParams& p) {
  const std::size_t base = p.n / 2 + 2;
  std::size_t total = 1;
  for (std::uint32_t k = 1; k < p.m; ++k) {
    if (total > std::numeric_limits<std::size_t>::max() / base) {
      return std::numeric_limits<std::size_t>::max();
    }
    total *= base;
  }
  return total;
}

ExperimentReport run_trials(const BoundParams& p,
                            const ExperimentOptions& options) {
  check_params(p);
  if (!options.exhaustive && options.trials == 0) {
    throw InvalidInput("run_trials needs trials >= 1");
  }
  if (options.oracle) {
    const std::size_t worst = worst_case_dp_states(p);
    if (worst > options.oracle_budget) {
      throw BudgetExceeded("oracle runs at m=" + std::to_string(p.m) +
                               ", n=" + std::to_string(p.n) + " may need " +
                               std::to_string(worst) + " DP states",
                           worst, options.oracle_budget);
    }
  }

  const auto started = std::chrono::steady_clock::now();
  ExperimentReport report = empty_report(p, options);

  if (options.exhaustive) {
    for_each_profile(p.m, p.n, [&](const Election& e) {
      accumulate(report, evaluate_trial(e, options));
    });
  } else {
    const SamplerConfig cfg{p.m, p.n, options.seed};
    const unsigned workers = std::max(1u, options.threads);
    std::vector<ExperimentReport> parts(workers, report);
    auto work = [&](unsigned w) {
      const std::uint64_t begin = options.trials * w / workers;
      const std::uint64_t end = options.trials * (w + 1) / workers;
      for (std::uint64_t t = begin; t < end; ++t) {
        accumulate(parts[w], evaluate_trial(sample_trial(cfg, t), options));
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }
    for (const ExperimentReport& part : parts) merge(report, part);
  }

  report.wall_time = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - started)
                         .count();
  return report;
}

nlohmann::json to_json(const ExperimentReport& r) {
  nlohmann::json j;
  j["m"] = r.m;
  j["n"] = r.n;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["oracle"] = r.oracle;
  j["exhaustive"] = r.exhaustive;
  j["maybe_count"] = r.maybe_count;
  j["pairfail_count"] = r.pairfail_count;
  j["mismatch_count"] = r.mismatch_count;
  j["implication_failures"] = r.implication_failures;
  j["maybe_freq"] = r.maybe_freq();
  j["pairfail_freq"] = r.pairfail_freq();
  j["pair_fail_counts"] = nlohmann::json::array();
  for (std::uint32_t c = 0; c < r.m; ++c) {
    std::vector<std::uint64_t> row(r.pair_fail_counts.begin() + c * r.m,
                                   r.pair_fail_counts.begin() + (c + 1) * r.m);
    j["pair_fail_counts"].push_back(row);
  }
  j["bound_winner"] = r.bound_winner;
  j["bound_pair"] = r.bound_pair ? nlohmann::json(*r.bound_pair) : nlohmann::json();
  j["wall_time"] = r.wall_time;
  return j;
}

std::string csv_header() {
  return "m,n,trials,seed,maybe_freq,pairfail_freq,bound_winner,bound_pair,"
         "mismatches,wall_time";
}

std::string to_csv_row(const ExperimentReport& r) {
  std::ostringstream out;
  out << std::setprecision(17) << r.m << ',' << r.n << ',' << r.trials << ','
      << r.seed << ',' << r.maybe_freq() << ',' << r.pairfail_freq() << ','
      << r.bound_winner << ',';
  if (r.bound_pair) out << *r.bound_pair;
  out << ',' << r.mismatch_count << ',' << r.wall_time;
  return out.str();
}

}  // namespace dodgson
