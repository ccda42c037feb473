#include <filesystem>
#include <fstream>
#include <random>

#include "catch2/catch_amalgamated.hpp"

#include "dodgson/codec.hpp"
#include "support.hpp"

using namespace dodgson;
using namespace dodgson::testing;

namespace {

DecodeErrorKind decode_failure(const std::string& bits) {
  try {
    decode(parse_bit_string(bits));
  } catch (const DecodeError& e) {
    return e.kind();
  }
  FAIL("decode accepted " << bits);
  return DecodeErrorKind::malformed_prefix;
}

DodgsonTriple random_triple(std::mt19937_64& rng, std::uint32_t max_m, std::size_t max_n) {
  const auto m = static_cast<std::uint32_t>(1 + rng() % max_m);
  Election e = random_election(rng, m, 1 + rng() % max_n);
  return DodgsonTriple(std::move(e), Candidate(static_cast<std::uint32_t>(1 + rng() % m)));
}

}  // namespace

TEST_CASE("field widths", "[codec]") {
  CHECK(field_width(1) == 1);
  CHECK(field_width(2) == 2);
  CHECK(field_width(3) == 2);
  CHECK(field_width(4) == 3);
  CHECK(field_width(7) == 3);
  CHECK(field_width(8) == 4);
  CHECK(encoded_length(4, 100) == 1210);
}

TEST_CASE("smallest triple encodes as 10111", "[codec]") {
  const DodgsonTriple t(ascending(1, {{1, "a"}}), Candidate(1));
  CHECK(to_bit_string(encode(t)) == "10111");
  CHECK(decode(parse_bit_string("10111")) == t);
}

TEST_CASE("two-candidate layout", "[codec]") {
  // 11 0 | m=10 | c=01 | vote (a,b) = 01 10.
  const DodgsonTriple t(ascending(2, {{1, "ab"}}), letter('a'));
  CHECK(to_bit_string(encode(t)) == "110" "10" "01" "0110");
  const DodgsonTriple two = decode(parse_bit_string("110 10 01 0110 1001"));
  CHECK(two.election.voters() == 2);
  CHECK(two.election.vote(1)[0] == letter('b'));
  CHECK(encode(DodgsonTriple(sixty_forty(), letter('d'))).bits.size() == 1210);
}

TEST_CASE("decode rejects malformed input", "[codec]") {
  CHECK(decode_failure("") == DecodeErrorKind::malformed_prefix);
  CHECK(decode_failure("0111") == DecodeErrorKind::malformed_prefix);
  CHECK(decode_failure("1111") == DecodeErrorKind::malformed_prefix);
  CHECK(decode_failure("1101") == DecodeErrorKind::malformed_prefix);
  // L=2 but m=1 needs only one bit.
  CHECK(decode_failure("110 01 01 01") == DecodeErrorKind::malformed_prefix);
  CHECK(decode_failure("10 0 1 1") == DecodeErrorKind::malformed_prefix);
  CHECK(decode_failure("10 1 0 1") == DecodeErrorKind::candidate_out_of_range);
  CHECK(decode_failure("110 10 11 0110") == DecodeErrorKind::candidate_out_of_range);
  // Vote field 11 names candidate 3 with m=2.
  CHECK(decode_failure("110 10 01 0111") == DecodeErrorKind::candidate_out_of_range);
  CHECK(decode_failure("110 10 01 0000") == DecodeErrorKind::candidate_out_of_range);
  CHECK(decode_failure("110 10 01 0101") == DecodeErrorKind::non_permutation_vote);
  CHECK(decode_failure("10 1 1") == DecodeErrorKind::trailing_bits);
  CHECK(decode_failure("110 10 01 011") == DecodeErrorKind::trailing_bits);
  CHECK(decode_failure("110 10 01 0110 10") == DecodeErrorKind::trailing_bits);
}

TEST_CASE("random triples round-trip with the predicted length", "[codec]") {
  std::mt19937_64 rng(67);
  for (int round = 0; round < 1000; ++round) {
    const DodgsonTriple t = random_triple(rng, 6, 20);
    const EncodedTriple bits = encode(t);
    REQUIRE(bits.bits.size() == encoded_length(t.election.candidates(), t.election.voters()));
    REQUIRE(decode(bits) == t);
    REQUIRE(unpack(pack(bits)) == bits);
    REQUIRE(parse_bit_string(to_bit_string(bits)) == bits);
  }
}

TEST_CASE("single bit flips never crash and structural damage is caught", "[codec]") {
  std::mt19937_64 rng(71);
  for (int round = 0; round < 100; ++round) {
    const DodgsonTriple t = random_triple(rng, 5, 6);
    const EncodedTriple good = encode(t);
    for (std::size_t k = 0; k < good.bits.size(); ++k) {
      EncodedTriple bad = good;
      bad.bits[k] = !bad.bits[k];
      try {
        const DodgsonTriple back = decode(bad);
        // A flip that still decodes must describe a different valid triple.
        REQUIRE_FALSE(back == t);
        REQUIRE(encode(back) == bad);
      } catch (const DecodeError&) {
      }
    }
  }
}

TEST_CASE("arbitrary bit strings never crash decode", "[codec]") {
  std::mt19937_64 rng(73);
  std::size_t accepted = 0;
  for (int round = 0; round < 10000; ++round) {
    EncodedTriple junk;
    const std::size_t len = rng() % 80;
    for (std::size_t k = 0; k < len; ++k) junk.bits.push_back((rng() & 1) != 0);
    try {
      const DodgsonTriple t = decode(junk);
      REQUIRE(encode(t) == junk);
      ++accepted;
    } catch (const DecodeError&) {
    }
  }
  CHECK(accepted < 10000);
}

TEST_CASE("packed form", "[codec]") {
  const EncodedTriple bits = parse_bit_string("10111");
  const auto bytes = pack(bits);
  REQUIRE(bytes.size() == 9);
  CHECK(bytes[7] == 5);
  CHECK(bytes[8] == 0b10111000);
  CHECK(unpack(bytes) == bits);

  auto padded = bytes;
  padded[8] |= 1;
  CHECK_THROWS_AS(unpack(padded), DecodeError);
  auto truncated = bytes;
  truncated.pop_back();
  CHECK_THROWS_AS(unpack(truncated), DecodeError);
  CHECK_THROWS_AS(unpack({0, 0, 0}), DecodeError);
  CHECK_THROWS_AS(parse_bit_string("10a11"), InvalidInput);
}

TEST_CASE("files round-trip in both formats", "[codec]") {
  const auto dir = std::filesystem::temp_directory_path() / "dodgson_codec_test";
  std::filesystem::create_directories(dir);
  const EncodedTriple bits = encode(DodgsonTriple(five_types(), letter('a')));
  for (const char* name : {"t.dtb", "t.dtbz"}) {
    write_encoded(dir / name, bits);
    CHECK(read_encoded(dir / name) == bits);
  }
  std::ifstream text(dir / "t.dtb");
  std::string first;
  std::getline(text, first);
  CHECK(first.size() == 64);
  std::filesystem::remove_all(dir);
}
