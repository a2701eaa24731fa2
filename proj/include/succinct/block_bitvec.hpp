#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include "succinct/bits.hpp"
#include "succinct/rank_directory.hpp"
#include "succinct/space.hpp"

namespace succinct {

/// Classic two-level rank directory: 2048-bit superblocks with 64-bit
/// absolute counts, 512-bit blocks with 16-bit relative counts
/// (0.0625 bits per element). select runs a global binary search.
class BlockBitVec {
  using Directory = detail::RankDirectory<2048, 512>;

 public:
  static constexpr std::size_t kSuperBits = Directory::kSuperBits;
  static constexpr std::size_t kBlockBits = Directory::kBlockBits;
  static constexpr std::size_t kMaxRankWords = Directory::kWordsPerBlock;

  using RankCursor = detail::WordRankCursor;

  BlockBitVec() = default;
  explicit BlockBitVec(RawBitVector raw);

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

  RankCursor rank_cursor(std::size_t start = 0) const;

  std::span<const std::uint64_t> super_ranks() const { return dir_.super_ranks(); }
  std::span<const std::uint16_t> block_ranks() const { return dir_.block_ranks(); }
  static constexpr std::pair<std::size_t, std::size_t> rank_scan_words(std::size_t i) {
    return Directory::scan_words(i);
  }

  SpaceReport space_report() const;

 private:
  void check_index(std::size_t i) const {
    if (i >= raw_.size()) throw_index(i);
  }
  [[noreturn]] void throw_index(std::size_t i) const;

  RawBitVector raw_;
  Directory dir_;
  std::uint64_t ones_ = 0;
};

inline BlockBitVec build_block(RawBitVector v) { return BlockBitVec(std::move(v)); }

}  // namespace succinct
