#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "dodgson/ballot.hpp"
#include "dodgson/codec.hpp"
#include "dodgson/experiment.hpp"
#include "dodgson/greedy.hpp"
#include "dodgson/oracle.hpp"
#include "dodgson/sampler.hpp"

namespace dodgson::cli {

namespace {

using nlohmann::json;

// Oracle and BFS disagree, or a `definitely` answer was wrong.
class AssertionFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ScoreMode mode_from(const std::string& text) {
  if (auto mode = parse_score_mode(text)) return *mode;
  throw InvalidInput("unknown mode '" + text + "' (use strict or tie-or-beat)");
}

json candidate_list(const BallotFile& file, const std::vector<Candidate>& cs) {
  json out = json::array();
  for (Candidate c : cs) {
    if (file.names.empty()) {
      out.push_back(c.index);
    } else {
      out.push_back(file.name_of(c));
    }
  }
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path);
}

struct Options {
  std::string ballots;
  std::string candidate;
  std::string mode = "strict";
  std::string output;
  std::string csv;
  bool check_bfs = false;
  bool exact = false;
  bool oracle = false;
  bool exhaustive = false;
  std::size_t dp_budget = kDefaultDpStateBudget;
  std::size_t bfs_budget = kDefaultBfsProfileBudget;
  std::uint32_t m = 0;
  std::size_t n = 0;
  std::vector<std::uint32_t> ms;
  std::vector<std::size_t> ns;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

int cmd_score(const Options& o, std::ostream& out) {
  const BallotFile file = read_ballots(o.ballots);
  const GreedyScoreResult r = greedy_score(file.election, file.resolve(o.candidate));
  out << json{{"score", r.score}, {"confidence", to_string(r.confidence)}}.dump()
      << '\n';
  return kOk;
}

int cmd_winner(const Options& o, std::ostream& out) {
  const BallotFile file = read_ballots(o.ballots);
  const GreedyWinnerResult r = greedy_winner(file.election, file.resolve(o.candidate));
  out << json{{"winner", r.winner ? "yes" : "no"},
              {"confidence", to_string(r.confidence)}}
             .dump()
      << '\n';
  return kOk;
}

int cmd_winners(const Options& o, std::ostream& out) {
  const BallotFile file = read_ballots(o.ballots);
  if (o.exact) {
    const ScoreMode mode = mode_from(o.mode);
    const auto winners = dodgson_winners(file.election, mode, o.dp_budget);
    out << json{{"winners", candidate_list(file, winners)},
                {"mode", to_string(mode)}}
               .dump()
        << '\n';
    return kOk;
  }
  const GreedyWinnersResult r = greedy_all_winners(file.election);
  out << json{{"winners", candidate_list(file, r.winners)},
              {"scores", r.scores},
              {"confidence", to_string(r.confidence)}}
             .dump()
      << '\n';
  return kOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const BallotFile file = read_ballots(o.ballots);
  const Candidate c = file.resolve(o.candidate);
  const ScoreMode mode = mode_from(o.mode);
  const std::int64_t score = exact_dodgson_score(file.election, c, mode, o.dp_budget);
  json result{{"score", score}, {"mode", to_string(mode)}};
  if (o.check_bfs) {
    const std::int64_t bfs = bfs_swap_score(file.election, c, mode, o.bfs_budget);
    result["bfs_score"] = bfs;
    result["agree"] = bfs == score;
    if (bfs != score) {
      out << result.dump() << '\n';
      throw AssertionFailure("exact oracle says " + std::to_string(score) +
                             " but BFS says " + std::to_string(bfs));
    }
  }
  out << result.dump() << '\n';
  return kOk;
}

int cmd_generate(const Options& o, std::ostream& out) {
  const Election e = sample_election({o.m, o.n, o.seed});
  const std::string text = format_ballots(e);
  if (o.output.empty()) {
    out << text;
  } else {
    write_text(o.output, text);
  }
  return kOk;
}

int cmd_experiment(const Options& o, std::ostream& out) {
  ExperimentOptions options;
  options.trials = o.trials;
  options.seed = o.seed;
  options.oracle = o.oracle;
  options.exhaustive = o.exhaustive;
  options.threads = o.threads;
  options.oracle_budget = o.dp_budget;

  json cells = json::array();
  std::string csv = csv_header() + '\n';
  std::uint64_t mismatches = 0;
  for (std::uint32_t m : o.ms) {
    for (std::size_t n : o.ns) {
      const ExperimentReport report = run_trials({m, n}, options);
      cells.push_back(to_json(report));
      csv += to_csv_row(report) + '\n';
      mismatches += report.mismatch_count;
      out << json{{"m", report.m},
                  {"n", report.n},
                  {"trials", report.trials},
                  {"maybe_freq", report.maybe_freq()},
                  {"pairfail_freq", report.pairfail_freq()},
                  {"bound_winner", report.bound_winner},
                  {"mismatches", report.mismatch_count}}
                 .dump()
          << '\n';
    }
  }
  if (!o.output.empty()) write_text(o.output, cells.dump(2) + '\n');
  if (!o.csv.empty()) write_text(o.csv, csv);
  if (mismatches != 0) {
    throw AssertionFailure(std::to_string(mismatches) +
                           " trials had a definitely answer contradicting the oracle");
  }
  return kOk;
}

int cmd_encode(const Options& o, std::ostream& out) {
  const BallotFile file = read_ballots(o.ballots);
  const DodgsonTriple triple(file.election, file.resolve(o.candidate));
  const EncodedTriple encoded = encode(triple);
  write_encoded(o.output, encoded);
  out << json{{"bits", encoded.bits.size()},
              {"m", triple.election.candidates()},
              {"n", triple.election.voters()}}
             .dump()
      << '\n';
  return kOk;
}

int cmd_decode(const Options& o, std::ostream& out) {
  const DodgsonTriple triple = decode(read_encoded(o.ballots));
  const std::string text = format_ballots(triple.election);
  if (o.output.empty()) {
    out << text;
  } else {
    write_text(o.output, text);
    out << json{{"m", triple.election.candidates()},
                {"n", triple.election.voters()},
                {"candidate", triple.candidate.index}}
               .dump()
        << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Greedy and exact Dodgson election scoring"};
  app.require_subcommand(1);
  Options o;

  auto ballots_arg = [&](CLI::App* cmd) {
    cmd->add_option("ballots", o.ballots, "Text ballot file")->required();
  };
  auto candidate_arg = [&](CLI::App* cmd) {
    cmd->add_option("-c,--candidate", o.candidate, "Candidate name or index")
        ->required();
  };
  auto budget_args = [&](CLI::App* cmd) {
    cmd->add_option("--budget", o.dp_budget, "DP state budget of the exact oracle");
  };

  auto* score = app.add_subcommand("score", "Greedy score of one candidate");
  ballots_arg(score);
  candidate_arg(score);

  auto* winner = app.add_subcommand("winner", "Greedy winner test for one candidate");
  ballots_arg(winner);
  candidate_arg(winner);

  auto* winners = app.add_subcommand("winners", "All winners, greedy or exact");
  ballots_arg(winners);
  winners->add_flag("--exact", o.exact, "Use the exact oracle instead");
  winners->add_option("--mode", o.mode, "strict or tie-or-beat (with --exact)");
  budget_args(winners);

  auto* oracle = app.add_subcommand("oracle", "Exact Dodgson score");
  ballots_arg(oracle);
  candidate_arg(oracle);
  oracle->add_option("--mode", o.mode, "strict or tie-or-beat");
  oracle->add_flag("--check-bfs", o.check_bfs, "Cross-check with the BFS oracle");
  oracle->add_option("--bfs-budget", o.bfs_budget, "Profile budget of the BFS oracle");
  budget_args(oracle);

  auto* generate = app.add_subcommand("generate", "Sample a uniform election");
  generate->add_option("--m", o.m, "Candidates")->required()->check(CLI::PositiveNumber);
  generate->add_option("--n", o.n, "Voters")->required()->check(CLI::PositiveNumber);
  generate->add_option("--seed", o.seed, "Seed");
  generate->add_option("-o,--output", o.output, "Output ballot file");

  auto* experiment = app.add_subcommand("experiment", "Monte Carlo bound check");
  experiment->add_option("--m", o.ms, "Candidates (one or more)")
      ->required()
      ->check(CLI::PositiveNumber);
  experiment->add_option("--n", o.ns, "Voters (one or more)")
      ->required()
      ->check(CLI::PositiveNumber);
  experiment->add_option("--trials", o.trials, "Trials per cell")
      ->check(CLI::PositiveNumber);
  experiment->add_option("--seed", o.seed, "Seed");
  experiment->add_flag("--oracle", o.oracle, "Check definitely answers exactly");
  experiment->add_flag("--exhaustive", o.exhaustive, "Sweep all (m!)^n profiles");
  experiment->add_option("--threads", o.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  experiment->add_option("-o,--output", o.output, "JSON report path");
  experiment->add_option("--csv", o.csv, "CSV series path");
  budget_args(experiment);

  auto* encode_cmd = app.add_subcommand("encode", "Ballots + candidate to .dtb/.dtbz");
  ballots_arg(encode_cmd);
  candidate_arg(encode_cmd);
  encode_cmd->add_option("-o,--output", o.output, "Output .dtb or .dtbz")->required();

  auto* decode_cmd = app.add_subcommand("decode", ".dtb/.dtbz to ballots");
  decode_cmd->add_option("input", o.ballots, "Encoded triple")->required();
  decode_cmd->add_option("-o,--output", o.output, "Output ballot file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (*score) return cmd_score(o, out);
    if (*winner) return cmd_winner(o, out);
    if (*winners) return cmd_winners(o, out);
    if (*oracle) return cmd_oracle(o, out);
    if (*generate) return cmd_generate(o, out);
    if (*experiment) return cmd_experiment(o, out);
    if (*encode_cmd) return cmd_encode(o, out);
    if (*decode_cmd) return cmd_decode(o, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const AssertionFailure& e) {
    err << "assertion failed: " << e.what() << '\n';
    return kInternalError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const DecodeError& e) {
    err << "decode error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace dodgson::cli
