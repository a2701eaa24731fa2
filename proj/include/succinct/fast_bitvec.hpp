#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>

#include "succinct/bits.hpp"
#include "succinct/rank_directory.hpp"
#include "succinct/space.hpp"

namespace succinct {

/// Asymmetric rank directory (4096-bit superblocks, 256-bit blocks,
/// 0.078125 bits per element) with select sampling: the bit position of
/// every 256-th one and every 256-th zero, stored as 32-bit entries.
class FastBitVec {
  using Directory = detail::RankDirectory<4096, 256>;

 public:
  static constexpr std::size_t kSuperBits = Directory::kSuperBits;
  static constexpr std::size_t kBlockBits = Directory::kBlockBits;
  static constexpr std::size_t kMaxRankWords = Directory::kWordsPerBlock;
  static constexpr unsigned kSampleShift = 8;
  static constexpr std::size_t kSampleRate = std::size_t{1} << kSampleShift;
  static constexpr std::uint64_t kMaxLength = std::uint64_t{1} << 32;

  using RankCursor = detail::WordRankCursor;

  FastBitVec() = default;
  /// Throws CapacityError if v.size() >= 2^32.
  explicit FastBitVec(RawBitVector raw);

  static void check_capacity(std::uint64_t len_bits);

  std::size_t size() const { return raw_.size(); }
  std::uint64_t count_ones() const { return ones_; }
  std::uint64_t count_zeros() const { return raw_.size() - ones_; }
  const RawBitVector& raw() const { return raw_; }
  bool get_bit(std::size_t i) const { return raw_.get_bit(i); }

  std::uint64_t rank1(std::size_t i) const {
    check_index(i);
    return dir_.rank1(raw_.words().data(), i);
  }
  std::uint64_t rank0(std::size_t i) const { return i + 1 - rank1(i); }
  std::size_t select1(std::uint64_t j) const;
  std::size_t select0(std::uint64_t j) const;

  // Bit-position bounds [lo, hi] the sampled directory yields for select1(j) / select0(j).
  std::pair<std::size_t, std::size_t> select1_window(std::uint64_t j) const;
  std::pair<std::size_t, std::size_t> select0_window(std::uint64_t j) const;

  RankCursor rank_cursor(std::size_t start = 0) const;

  std::span<const std::uint64_t> super_ranks() const { return dir_.super_ranks(); }
  std::span<const std::uint16_t> block_ranks() const { return dir_.block_ranks(); }
  std::span<const std::uint32_t> select1_samples() const { return samples1_; }
  std::span<const std::uint32_t> select0_samples() const { return samples0_; }
  static constexpr std::pair<std::size_t, std::size_t> rank_scan_words(std::size_t i) {
    return Directory::scan_words(i);
  }

  SpaceReport space_report() const;

 private:
  void check_index(std::size_t i) const {
    if (i >= raw_.size()) throw_index(i);
  }
  [[noreturn]] void throw_index(std::size_t i) const;
  std::pair<std::size_t, std::size_t> window(std::span<const std::uint32_t> samples, std::uint64_t j) const;

  RawBitVector raw_;
  Directory dir_;
  std::vector<std::uint32_t> samples1_;
  std::vector<std::uint32_t> samples0_;
  std::uint64_t ones_ = 0;
};

inline FastBitVec build_fast(RawBitVector v) { return FastBitVec(std::move(v)); }

}  // namespace succinct
