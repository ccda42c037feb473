#include "dodgson/codec.hpp"

#include <bit>
#include <fstream>
#include <iterator>

namespace dodgson {

namespace {

void put_field(std::vector<bool>& bits, std::uint32_t value, std::uint32_t width) {
  for (std::uint32_t k = width; k-- > 0;) bits.push_back(((value >> k) & 1u) != 0);
}

std::uint32_t get_field(const std::vector<bool>& bits, std::size_t at,
                        std::uint32_t width) {
  std::uint32_t value = 0;
  for (std::uint32_t k = 0; k < width; ++k) value = (value << 1) | bits[at + k];
  return value;
}

bool is_packed(const std::filesystem::path& path) {
  return path.extension() == ".dtbz";
}

}  // namespace

std::string_view to_string(DecodeErrorKind kind) {
  switch (kind) {
    case DecodeErrorKind::malformed_prefix:
      return "malformed-prefix";
    case DecodeErrorKind::candidate_out_of_range:
      return "candidate-out-of-range";
    case DecodeErrorKind::non_permutation_vote:
      return "non-permutation-vote";
    case DecodeErrorKind::trailing_bits:
      return "trailing-bits";
  }
  return "unknown";
}

std::uint32_t field_width(std::uint32_t m) {
  return static_cast<std::uint32_t>(std::bit_width(m));
}

std::size_t encoded_length(std::uint32_t m, std::size_t n) {
  const std::size_t width = field_width(m);
  return (width + 1) + 2 * width + n * m * width;
}

EncodedTriple encode(const DodgsonTriple& triple) {
  const Election& e = triple.election;
  const std::uint32_t m = e.candidates();
  const std::uint32_t width = field_width(m);
  EncodedTriple out;
  out.bits.reserve(encoded_length(m, e.voters()));
  out.bits.insert(out.bits.end(), width, true);
  out.bits.push_back(false);
  put_field(out.bits, m, width);
  put_field(out.bits, triple.candidate.index, width);
  for (std::size_t i = 0; i < e.voters(); ++i) {
    for (Candidate c : e.vote(i)) put_field(out.bits, c.index, width);
  }
  return out;
}

DodgsonTriple decode(const EncodedTriple& encoded) {
  const std::vector<bool>& bits = encoded.bits;
  std::size_t width = 0;
  while (width < bits.size() && bits[width]) ++width;
  if (width == 0) {
    throw DecodeError(DecodeErrorKind::malformed_prefix, "no leading 1 run");
  }
  if (width == bits.size()) {
    throw DecodeError(DecodeErrorKind::malformed_prefix, "1 run is not terminated by 0");
  }
  if (width > 31) {
    throw DecodeError(DecodeErrorKind::malformed_prefix, "field width exceeds 31 bits");
  }
  const auto w = static_cast<std::uint32_t>(width);
  std::size_t at = width + 1;
  if (bits.size() - at < 2 * width) {
    throw DecodeError(DecodeErrorKind::malformed_prefix,
                      "header ends before candidate count and candidate");
  }
  const std::uint32_t m = get_field(bits, at, w);
  at += w;
  if (m == 0 || field_width(m) != w) {
    throw DecodeError(DecodeErrorKind::malformed_prefix,
                      "candidate count " + std::to_string(m) +
                          " does not match field width " + std::to_string(w));
  }
  const std::uint32_t c = get_field(bits, at, w);
  at += w;
  if (c == 0 || c > m) {
    throw DecodeError(DecodeErrorKind::candidate_out_of_range,
                      "chosen candidate " + std::to_string(c) +
                          " outside 1.." + std::to_string(m));
  }

  const std::size_t vote_bits = static_cast<std::size_t>(m) * w;
  const std::size_t rest = bits.size() - at;
  if (rest == 0) {
    throw DecodeError(DecodeErrorKind::trailing_bits, "underflow: no votes");
  }
  if (rest % vote_bits != 0) {
    throw DecodeError(DecodeErrorKind::trailing_bits,
                      std::to_string(rest % vote_bits) +
                          " bits left over after the last whole vote");
  }

  std::vector<Candidate> flat;
  flat.reserve(rest / w);
  std::vector<bool> seen(m);
  for (std::size_t vote = 0; at < bits.size(); ++vote) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::uint32_t k = 0; k < m; ++k, at += w) {
      const std::uint32_t value = get_field(bits, at, w);
      if (value == 0 || value > m) {
        throw DecodeError(DecodeErrorKind::candidate_out_of_range,
                          "vote " + std::to_string(vote + 1) + " names candidate " +
                              std::to_string(value));
      }
      if (seen[value - 1]) {
        throw DecodeError(DecodeErrorKind::non_permutation_vote,
                          "vote " + std::to_string(vote + 1) + " repeats candidate " +
                              std::to_string(value));
      }
      seen[value - 1] = true;
      flat.emplace_back(value);
    }
  }
  return DodgsonTriple(Election::from_flat(m, std::move(flat)), Candidate(c));
}

std::string to_bit_string(const EncodedTriple& encoded) {
  std::string out;
  out.reserve(encoded.bits.size());
  for (bool b : encoded.bits) out.push_back(b ? '1' : '0');
  return out;
}

EncodedTriple parse_bit_string(std::string_view text) {
  EncodedTriple out;
  for (char ch : text) {
    if (ch == '0' || ch == '1') {
      out.bits.push_back(ch == '1');
    } else if (ch != ' ' && ch != '\n' && ch != '\r' && ch != '\t') {
      throw InvalidInput(std::string("unexpected character '") + ch +
                         "' in bit string");
    }
  }
  return out;
}

std::vector<std::uint8_t> pack(const EncodedTriple& encoded) {
  const std::uint64_t length = encoded.bits.size();
  std::vector<std::uint8_t> out;
  out.reserve(8 + (length + 7) / 8);
  for (int shift = 56; shift >= 0; shift -= 8) {
    out.push_back(static_cast<std::uint8_t>(length >> shift));
  }
  for (std::size_t i = 0; i < length; i += 8) {
    std::uint8_t byte = 0;
    for (std::size_t k = 0; k < 8; ++k) {
      byte <<= 1;
      if (i + k < length && encoded.bits[i + k]) byte |= 1;
    }
    out.push_back(byte);
  }
  return out;
}

EncodedTriple unpack(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < 8) {
    throw DecodeError(DecodeErrorKind::trailing_bits,
                      "underflow: packed file shorter than its 8-byte header");
  }
  std::uint64_t length = 0;
  for (std::size_t k = 0; k < 8; ++k) length = (length << 8) | bytes[k];
  const std::uint64_t payload = bytes.size() - 8;
  if (length > payload * 8 || (length + 7) / 8 != payload) {
    throw DecodeError(DecodeErrorKind::trailing_bits,
                      "packed header says " + std::to_string(length) +
                          " bits but payload holds " + std::to_string(payload) +
                          " bytes");
  }
  EncodedTriple out;
  out.bits.reserve(length);
  for (std::uint64_t i = 0; i < payload * 8; ++i) {
    const bool bit = ((bytes[8 + i / 8] >> (7 - i % 8)) & 1u) != 0;
    if (i < length) {
      out.bits.push_back(bit);
    } else if (bit) {
      throw DecodeError(DecodeErrorKind::trailing_bits, "nonzero padding bits");
    }
  }
  return out;
}

void write_encoded(const std::filesystem::path& path, const EncodedTriple& encoded) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  if (is_packed(path)) {
    const auto bytes = pack(encoded);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
  } else {
    const std::string text = to_bit_string(encoded);
    for (std::size_t i = 0; i < text.size(); i += 64) {
      out << text.substr(i, 64) << '\n';
    }
  }
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

EncodedTriple read_encoded(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<char> raw((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
  if (is_packed(path)) {
    return unpack(std::vector<std::uint8_t>(raw.begin(), raw.end()));
  }
  return parse_bit_string(std::string_view(raw.data(), raw.size()));
}

}  // namespace dodgson
