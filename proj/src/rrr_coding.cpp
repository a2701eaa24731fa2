#include "succinct/rrr_coding.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace succinct::rrr {

BlockCode encode_block(std::uint32_t x) {
  if (x >= kNumBlockValues) throw std::domain_error("encode_block: value " + std::to_string(x) + " exceeds 15 bits");
  // Colex rank: sum over set bits (positions ascending) of C(position, ordinal).
  std::uint32_t offset = 0;
  unsigned ordinal = 0;
  for (unsigned pos = 0; pos < kBlockBits; ++pos) {
    if ((x >> pos) & 1U) offset += kBinomial[pos][++ordinal];
  }
  return {static_cast<std::uint8_t>(ordinal), static_cast<std::uint16_t>(offset)};
}

std::uint16_t decode_block(unsigned cls, std::uint32_t offset) {
  if (cls > kBlockBits) throw std::domain_error("decode_block: class " + std::to_string(cls) + " > 15");
  if (offset >= kBinomial[kBlockBits][cls]) {
    throw std::domain_error("decode_block: offset " + std::to_string(offset) + " >= C(15," + std::to_string(cls) +
                            ")");
  }
  std::uint16_t x = 0;
  for (unsigned k = cls; k > 0; --k) {
    // Highest position p with C(p, k) <= offset.
    unsigned p = k - 1;
    while (p + 1 < kBlockBits && kBinomial[p + 1][k] <= offset) ++p;
    x |= static_cast<std::uint16_t>(1U << p);
    offset -= kBinomial[p][k];
  }
  return x;
}

Tables::Tables() : class_table_(kNumBlockValues), offset_table_(kNumBlockValues), decode_(kNumBlockValues) {
  for (unsigned c = 0; c < kNumClasses; ++c) row_start_[c + 1] = row_start_[c] + kBinomial[kBlockBits][c];
  std::array<std::uint32_t, kNumClasses> next{};
  for (std::uint32_t x = 0; x < kNumBlockValues; ++x) {
    const auto c = static_cast<unsigned>(std::popcount(x));
    class_table_[x] = static_cast<std::uint8_t>(c);
    offset_table_[x] = static_cast<std::uint16_t>(next[c]);
    decode_[row_start_[c] + next[c]] = static_cast<std::uint16_t>(x);
    ++next[c];
  }
}

const Tables& default_tables() {
  static const Tables tables;
  return tables;
}

double class_probability(double p, unsigned c) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("class_probability: density must lie in [0, 1]");
  if (c > kBlockBits) throw std::domain_error("class_probability: class must be <= 15");
  return static_cast<double>(kBinomial[kBlockBits][c]) * std::pow(p, c) * std::pow(1.0 - p, kBlockBits - c);
}

double expected_offset_bits(double p) {
  double sum = 0.0;
  for (unsigned c = 0; c < kNumClasses; ++c) sum += class_probability(p, c) * kWidth[c];
  return sum;
}

double expected_candidate_superblocks(double d) {
  if (!(d > 0.0 && d <= 1.0)) throw std::domain_error("expected_candidate_superblocks: density must lie in (0, 1]");
  return 256.0 / (240.0 * d);
}

}  // namespace succinct::rrr
