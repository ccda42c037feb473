#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dodgson/election.hpp"

namespace dodgson {

// Binary encoding of a Dodgson triple. With L = ceil(log2(m+1)):
//
//   1^L 0 | m (L bits) | c (L bits) | vote_1 | ... | vote_n
//
// Each vote is m fields of L bits, least preferred candidate first. Fields are
// big-endian and hold 1-based candidate indices. n is not stored; it follows
// from the remaining length, which must be a positive multiple of m*L.
struct EncodedTriple {
  std::vector<bool> bits;

  friend bool operator==(const EncodedTriple&, const EncodedTriple&) = default;
};

enum class DecodeErrorKind {
  malformed_prefix,
  candidate_out_of_range,
  non_permutation_vote,
  trailing_bits,
};

std::string_view to_string(DecodeErrorKind kind);

class DecodeError : public std::runtime_error {
 public:
  DecodeError(DecodeErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind) {}

  DecodeErrorKind kind() const noexcept { return kind_; }

 private:
  DecodeErrorKind kind_;
};

// L = ceil(log2(m+1)), the width of every field.
std::uint32_t field_width(std::uint32_t m);

// (L+1) + 2L + n*m*L.
std::size_t encoded_length(std::uint32_t m, std::size_t n);

EncodedTriple encode(const DodgsonTriple& triple);

// Exact inverse of encode. Throws DecodeError on any malformed input and
// never reads out of bounds.
DodgsonTriple decode(const EncodedTriple& encoded);

// ASCII '0'/'1'. Parsing skips whitespace and rejects anything else.
std::string to_bit_string(const EncodedTriple& encoded);
EncodedTriple parse_bit_string(std::string_view text);

// Packed form: 64-bit big-endian bit count, then the bits MSB first with the
// last byte zero-padded.
std::vector<std::uint8_t> pack(const EncodedTriple& encoded);
EncodedTriple unpack(const std::vector<std::uint8_t>& bytes);

// .dtb holds ASCII bits wrapped at 64 per line; .dtbz holds the packed form.
void write_encoded(const std::filesystem::path& path, const EncodedTriple& encoded);
EncodedTriple read_encoded(const std::filesystem::path& path);

}  // namespace dodgson
