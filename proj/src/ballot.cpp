#include "dodgson/ballot.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace dodgson {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto at = s.find(sep, start);
    out.push_back(trim(s.substr(start, at == std::string_view::npos ? at : at - start)));
    if (at == std::string_view::npos) return out;
    start = at + 1;
  }
}

template <typename T>
bool parse_number(std::string_view s, T& out) {
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

struct Line {
  std::size_t number;
  std::string_view text;
};

struct RawBallot {
  std::size_t line;
  std::vector<std::string_view> tokens;
};

}  // namespace

Candidate BallotFile::resolve(std::string_view token) const {
  if (!names.empty()) {
    const auto it = std::find(names.begin(), names.end(), token);
    if (it != names.end()) {
      return Candidate(static_cast<std::uint32_t>(it - names.begin() + 1));
    }
  }
  std::uint32_t index = 0;
  if (parse_number(token, index) && election.contains(Candidate(index))) {
    return Candidate(index);
  }
  throw InvalidInput("unknown candidate '" + std::string(token) + "'");
}

std::string BallotFile::name_of(Candidate c) const {
  return names.empty() ? std::to_string(c.index) : names[slot(c)];
}

BallotFile parse_ballots(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  for (std::string_view rest = text; !rest.empty() || number == 0;) {
    ++number;
    const auto nl = rest.find('\n');
    const std::string_view raw = rest.substr(0, nl);
    rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
    const std::string_view body = trim(raw);
    if (!body.empty() && body.front() != '#') lines.push_back({number, body});
    if (nl == std::string_view::npos) break;
  }
  if (lines.empty()) throw ParseError(0, "empty ballot file");

  const Line& header = lines.front();
  std::uint32_t m = 0;
  std::size_t n = 0;
  {
    std::istringstream in{std::string(header.text)};
    std::string m_text, n_text, extra;
    in >> m_text >> n_text;
    if (!parse_number(m_text, m) || !parse_number(n_text, n) || (in >> extra)) {
      throw ParseError(header.number, "expected header \"m n\"");
    }
    if (m == 0) throw ParseError(header.number, "m must be at least 1");
    if (n == 0) throw ParseError(header.number, "n must be at least 1");
  }

  std::vector<std::string> names;
  std::size_t next = 1;
  if (next < lines.size() && lines[next].text.starts_with("names:")) {
    const Line& line = lines[next++];
    for (std::string_view token : split(line.text.substr(6), ',')) {
      if (token.empty()) throw ParseError(line.number, "empty candidate name");
      if (std::find(names.begin(), names.end(), token) != names.end()) {
        throw ParseError(line.number, "duplicate name '" + std::string(token) + "'");
      }
      names.emplace_back(token);
    }
    if (names.size() != m) {
      throw ParseError(line.number, "names line lists " + std::to_string(names.size()) +
                                        " candidates, header says " + std::to_string(m));
    }
  }

  std::vector<RawBallot> ballots;
  for (; next < lines.size(); ++next) {
    if (ballots.size() == n) {
      throw ParseError(lines[next].number,
                       "more ballots than the " + std::to_string(n) + " declared");
    }
    ballots.push_back({lines[next].number, split(lines[next].text, ',')});
  }
  if (ballots.size() != n) {
    throw ParseError(0, "expected " + std::to_string(n) + " ballots, found " +
                            std::to_string(ballots.size()));
  }

  bool numeric = names.empty();
  for (const RawBallot& b : ballots) {
    for (std::string_view token : b.tokens) {
      std::uint32_t ignored = 0;
      if (!parse_number(token, ignored)) numeric = false;
    }
  }

  std::map<std::string, std::uint32_t, std::less<>> index_of;
  for (std::size_t k = 0; k < names.size(); ++k) {
    index_of.emplace(names[k], static_cast<std::uint32_t>(k + 1));
  }
  const bool fixed_names = !names.empty();

  std::vector<Candidate> flat;
  flat.reserve(n * m);
  for (const RawBallot& b : ballots) {
    if (b.tokens.size() != m) {
      throw ParseError(b.line, "ballot ranks " + std::to_string(b.tokens.size()) +
                                   " candidates, expected " + std::to_string(m));
    }
    std::vector<bool> seen(m, false);
    std::vector<Candidate> ranking;
    for (std::string_view token : b.tokens) {
      if (token.empty()) throw ParseError(b.line, "empty candidate in ballot");
      std::uint32_t index = 0;
      if (numeric) {
        parse_number(token, index);
        if (index < 1 || index > m) {
          throw ParseError(b.line, "candidate " + std::string(token) +
                                       " outside 1.." + std::to_string(m));
        }
      } else if (auto it = index_of.find(token); it != index_of.end()) {
        index = it->second;
      } else if (fixed_names || names.size() == m) {
        throw ParseError(b.line, "unknown candidate '" + std::string(token) + "'");
      } else {
        names.emplace_back(token);
        index = static_cast<std::uint32_t>(names.size());
        index_of.emplace(names.back(), index);
      }
      if (seen[index - 1]) {
        throw ParseError(b.line, "candidate '" + std::string(token) +
                                     "' appears twice in one ballot");
      }
      seen[index - 1] = true;
      ranking.emplace_back(index);
    }
    std::reverse(ranking.begin(), ranking.end());
    flat.insert(flat.end(), ranking.begin(), ranking.end());
  }
  return BallotFile{Election::from_flat(m, std::move(flat)), std::move(names)};
}

BallotFile read_ballots(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_ballots(buffer.str());
}

std::string format_ballots(const Election& e, const std::vector<std::string>& names) {
  std::ostringstream out;
  out << e.candidates() << ' ' << e.voters() << '\n';
  if (!names.empty()) {
    out << "names: ";
    for (std::size_t k = 0; k < names.size(); ++k) out << (k ? "," : "") << names[k];
    out << '\n';
  }
  for (std::size_t i = 0; i < e.voters(); ++i) {
    auto v = e.vote(i);
    for (std::size_t k = v.size(); k-- > 0;) {
      const Candidate c = v[k];
      out << (names.empty() ? std::to_string(c.index) : names[slot(c)]);
      out << (k ? "," : "\n");
    }
  }
  return out.str();
}

}  // namespace dodgson
