#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "dodgson/election.hpp"

namespace dodgson {

// Text ballot format:
//
//   # comments and blank lines are ignored anywhere
//   m n
//   names: alice,bob,carol        <- optional, gives names to 1..m in order
//   carol,alice,bob               <- n ballots, most preferred first
//   ...
//
// Without a names line, ballots made only of integers are read as indices
// 1..m; otherwise tokens are names numbered by first appearance.
struct BallotFile {
  Election election;
  std::vector<std::string> names;  // names[slot(c)]; empty for plain indices

  // Accepts a name (when names exist) or a decimal index.
  Candidate resolve(std::string_view token) const;
  std::string name_of(Candidate c) const;
};

// Throws ParseError naming the offending line.
BallotFile parse_ballots(std::string_view text);
BallotFile read_ballots(const std::filesystem::path& path);

// Canonical text: header, optional names line, one ballot per line.
std::string format_ballots(const Election& e,
                           const std::vector<std::string>& names = {});

}  // namespace dodgson
