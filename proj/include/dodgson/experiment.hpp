#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "dodgson/election.hpp"
#include "dodgson/oracle.hpp"

namespace dodgson {

struct BoundParams {
  std::uint32_t m = 1;
  std::size_t n = 1;
};

// Upper bound on the probability that some candidate's greedy winner answer
// is `maybe` for a uniformly random election: 2(m^2-m) exp(-n/(8m^2)).
double bound_winner(const BoundParams& p);

// Upper bound on the probability that one ordered pair (c, d) violates the
// tally conditions of pair_condition_holds: 2 exp(-n/(8m^2)). Requires m >= 2.
double bound_pair(const BoundParams& p);

// True iff #{votes preferring d to c} <= (2mn+n)/(4m) and
// #{votes with d immediately above c} >= 3n/(4m). Compared in integers.
bool pair_condition_holds(const PairwiseStats& stats, Candidate d);
bool pair_condition_holds(const Election& e, Candidate c, Candidate d);
inline bool pair_condition_holds(const DodgsonTriple& t, Candidate d) {
  return pair_condition_holds(t.election, t.candidate, d);
}

struct ExperimentOptions {
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  bool oracle = false;
  // Sweep all (m!)^n profiles instead of sampling; `trials` is then ignored.
  bool exhaustive = false;
  unsigned threads = 1;
  std::size_t oracle_budget = kDefaultDpStateBudget;
};

// What one election contributed to the report.
struct TrialOutcome {
  bool maybe = false;
  bool pairfail = false;
  bool mismatch = false;
  // All ordered pairs meet the tally conditions, yet some answer is `maybe`.
  bool implication_failure = false;
  std::vector<bool> pair_fail;  // [slot(c) * m + slot(d)]
};

struct ExperimentReport {
  std::uint32_t m = 1;
  std::size_t n = 1;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  bool oracle = false;
  bool exhaustive = false;
  std::uint64_t maybe_count = 0;
  std::uint64_t pairfail_count = 0;
  std::uint64_t mismatch_count = 0;
  std::uint64_t implication_failures = 0;
  std::vector<std::uint64_t> pair_fail_counts;  // [slot(c) * m + slot(d)]
  double bound_winner = 0.0;
  std::optional<double> bound_pair;  // absent when m < 2
  double wall_time = 0.0;

  double maybe_freq() const;
  double pairfail_freq() const;
  std::uint64_t pair_fail_count(Candidate c, Candidate d) const {
    return pair_fail_counts[slot(c) * m + slot(d)];
  }

  // Equality of every counted field; wall_time is excluded.
  bool same_counts(const ExperimentReport& other) const;
};

// Greedy winner for every candidate, every ordered-pair tally check, and the
// exact oracle when options.oracle is set.
TrialOutcome evaluate_trial(const Election& e, const ExperimentOptions& options);

ExperimentReport empty_report(const BoundParams& p,
                              const ExperimentOptions& options);
void accumulate(ExperimentReport& report, const TrialOutcome& outcome);
void merge(ExperimentReport& into, const ExperimentReport& part);

// Monte Carlo (or exhaustive) estimate of the maybe and pair-violation
// frequencies. Trial i always uses substream i of options.seed, so the
// report does not depend on the thread count. Throws BudgetExceeded when the
// oracle is requested for a size whose worst case exceeds the budget.
ExperimentReport run_trials(const BoundParams& p,
                            const ExperimentOptions& options);

// Worst-case DP state count over all elections of this size:
// (floor(n/2)+2)^(m-1), saturating.
std::size_t worst_case_dp_states(const BoundParams& p);

nlohmann::json to_json(const ExperimentReport& report);
std::string csv_header();
std::string to_csv_row(const ExperimentReport& report);

}  // namespace dodgson
