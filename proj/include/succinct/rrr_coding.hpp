#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace succinct::rrr {

inline constexpr unsigned kBlockBits = 15;
inline constexpr unsigned kNumClasses = kBlockBits + 1;
inline constexpr std::uint32_t kNumBlockValues = 1U << kBlockBits;
inline constexpr std::uint16_t kFullBlock = 0x7FFF;

/// Exact C(n, k) for 0 <= k <= n <= 15, via Pascal's rule.
inline constexpr auto kBinomial = [] {
  std::array<std::array<std::uint32_t, kNumClasses>, kNumClasses> c{};
  for (unsigned n = 0; n < kNumClasses; ++n) {
    c[n][0] = 1;
    for (unsigned k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + (k < n ? c[n - 1][k] : 0);
  }
  return c;
}();

/// Offset width per class: ceil(log2 C(15, c)).
inline constexpr auto kWidth = [] {
  std::array<std::uint8_t, kNumClasses> w{};
  for (unsigned c = 0; c < kNumClasses; ++c) {
    std::uint8_t bits = 0;
    while ((std::uint32_t{1} << bits) < kBinomial[kBlockBits][c]) ++bits;
    w[c] = bits;
  }
  return w;
}();

struct BlockCode {
  std::uint8_t cls = 0;
  std::uint16_t offset = 0;
  friend bool operator==(const BlockCode&, const BlockCode&) = default;
};

/// Class = popcount; offset = rank of x among same-class 15-bit values in
/// ascending integer order, computed with the combinatorial number system.
/// Throws std::domain_error if x >= 2^15.
BlockCode encode_block(std::uint32_t x);

/// Inverse of encode_block. Throws std::domain_error if cls > 15 or
/// offset >= C(15, cls).
std::uint16_t decode_block(unsigned cls, std::uint32_t offset);

/// Lookup tables for block size 15, filled by enumerating every 15-bit value
/// in ascending order (independent of the combinatorial route above).
class Tables {
 public:
  Tables();

  std::uint8_t cls(std::uint32_t x) const { return class_table_[x]; }
  std::uint16_t offset(std::uint32_t x) const { return offset_table_[x]; }
  std::uint16_t decode(unsigned cls, std::uint32_t offset) const { return decode_[row_start_[cls] + offset]; }
  static constexpr std::uint8_t width(unsigned cls) { return kWidth[cls]; }

  std::span<const std::uint8_t> class_table() const { return class_table_; }
  std::span<const std::uint16_t> offset_table() const { return offset_table_; }
  std::span<const std::uint16_t> decode_row(unsigned cls) const {
    return std::span<const std::uint16_t>(decode_).subspan(row_start_[cls], kBinomial[kBlockBits][cls]);
  }

 private:
  std::vector<std::uint8_t> class_table_;
  std::vector<std::uint16_t> offset_table_;
  std::vector<std::uint16_t> decode_;
  std::array<std::uint32_t, kNumClasses + 1> row_start_{};
};

/// Process-wide immutable tables, built on first use.
const Tables& default_tables();

inline Tables build_tables() { return Tables(); }

/// P(class = c) for i.i.d. bits of density p: C(15,c) p^c (1-p)^(15-c).
/// Throws std::domain_error if p is outside [0, 1] or c > 15.
double class_probability(double p, unsigned c);

/// Expected offset bits per 15-bit block at density p.
double expected_offset_bits(double p);

/// Expected number of 240-bit superblocks spanned by one 256-entry select
/// sample window at density d: 256 / (240 d). Throws std::domain_error for d
/// outside (0, 1].
double expected_candidate_superblocks(double d);

}  // namespace succinct::rrr
