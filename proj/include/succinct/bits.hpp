#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "succinct/errors.hpp"

namespace succinct {

inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t len_bits) {
  return (len_bits + kWordBits - 1) / kWordBits;
}

// Mask selecting bits [0, k] of a word, k in [0, 63].
constexpr std::uint64_t mask_through(unsigned k) {
  return (std::uint64_t{2} << k) - 1;
}

// Mask selecting the low `count` bits, count in [0, 64].
constexpr std::uint64_t low_mask(unsigned count) {
  return count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
}

constexpr unsigned popcount_word(std::uint64_t w) { return static_cast<unsigned>(std::popcount(w)); }

namespace detail {

inline constexpr auto kSelectInByte = [] {
  std::array<std::array<std::uint8_t, 8>, 256> table{};
  for (unsigned byte = 0; byte < 256; ++byte) {
    unsigned k = 0;
    for (unsigned bit = 0; bit < 8; ++bit) {
      if ((byte >> bit) & 1U) table[byte][k++] = static_cast<std::uint8_t>(bit);
    }
  }
  return table;
}();

// Position of the (k+1)-th set bit of w. Requires k < popcount(w).
inline unsigned select_in_word_unchecked(std::uint64_t w, unsigned k) {
  unsigned base = 0;
  for (;;) {
    const unsigned in_byte = popcount_word(w & 0xFF);
    if (k < in_byte) break;
    k -= in_byte;
    w >>= 8;
    base += 8;
  }
  return base + detail::kSelectInByte[w & 0xFF][k];
}

}  // namespace detail

/// Position (LSB-first) of the (k+1)-th set bit of `w`.
/// Throws RankOutOfRange when k >= popcount(w).
unsigned select_in_word(std::uint64_t w, unsigned k);

/// Plain bit array over 64-bit words, bit i stored in word i/64 at offset i%64.
/// Bits past len_bits in the final word are always zero.
class RawBitVector {
 public:
  RawBitVector() = default;
  explicit RawBitVector(std::size_t len_bits, bool value = false);

  // Takes ownership of `words`; padding bits past len_bits are cleared.
  // Throws std::invalid_argument if words.size() != ceil(len_bits / 64).
  static RawBitVector from_words(std::vector<std::uint64_t> words, std::size_t len_bits);
  // "1011" -> bits 1,0,1,1 at positions 0..3. Throws std::invalid_argument on other characters.
  static RawBitVector from_string(std::string_view bits);
  static RawBitVector from_positions(std::size_t len_bits, std::span<const std::size_t> ones);

  std::size_t size() const { return len_bits_; }
  bool empty() const { return len_bits_ == 0; }
  std::span<const std::uint64_t> words() const { return words_; }

  bool get_bit(std::size_t i) const;
  bool bit(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set_bit(std::size_t i, bool value);

  // Up to 64 bits starting at `pos`; bits at or past size() read as zero.
  std::uint64_t extract(std::size_t pos, unsigned len) const;

  std::size_t count_ones() const;

  friend bool operator==(const RawBitVector&, const RawBitVector&) = default;

 private:
  std::vector<std::uint64_t> words_;
  std::size_t len_bits_ = 0;
};

/// Parameters for `generate`.
struct GeneratorSpec {
  std::uint64_t seed = 0;
  double density = 0.5;
  std::size_t len_bits = 0;
};

/// Bernoulli(density) bits from std::mt19937_64 seeded with spec.seed. Bit i
/// consumes the i-th 64-bit draw and is set iff draw < density * 2^64, so the
/// output is identical on every conforming standard library.
/// Throws std::domain_error if density is outside [0, 1].
RawBitVector generate(const GeneratorSpec& spec);

// Little-endian: "SBV1" | u32 version (1) | u64 len_bits | ceil(len_bits/64) x u64 words.
inline constexpr std::array<char, 4> kSerialMagic{'S', 'B', 'V', '1'};
inline constexpr std::uint32_t kSerialVersion = 1;
inline constexpr std::size_t kSerialHeaderBytes = 16;

std::vector<std::uint8_t> serialize(const RawBitVector& v);
/// Throws FormatError on bad magic, unknown version, truncated or oversized
/// streams, and non-zero padding bits.
RawBitVector deserialize(std::span<const std::uint8_t> bytes);

}  // namespace succinct
