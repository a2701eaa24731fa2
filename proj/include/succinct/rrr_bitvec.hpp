#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "succinct/bits.hpp"
#include "succinct/rrr_coding.hpp"
#include "succinct/space.hpp"

namespace succinct {

/// RRR-compressed bit vector with block size 15.
///
/// Layout:
///   - classes: one 4-bit class per block, two per byte (low nibble first);
///   - offsets: LSB-first bitstream, width(class) bits per block, contiguous;
///   - superblocks: every 16 blocks (240 bits) a 64-bit cumulative rank and a
///     64-bit bit pointer to the superblock's first offset;
///   - select samples: 32-bit superblock index holding every 256-th one
///     (resp. zero).
///
/// The final partial block is encoded as if zero-padded to 15 bits. The
/// tables passed at construction must outlive the vector.
class RRRBitVec {
 public:
  static constexpr std::size_t kBlockBits = rrr::kBlockBits;
  static constexpr std::size_t kBlocksPerSuper = 16;
  static constexpr std::size_t kSuperBits = kBlockBits * kBlocksPerSuper;
  static constexpr unsigned kSampleShift = 8;
  static constexpr std::size_t kSampleRate = std::size_t{1} << kSampleShift;

  struct Superblock {
    std::uint64_t cum_rank = 0;
    std::uint64_t bit_ptr = 0;
  };

  class RankCursor;

  RRRBitVec() = default;
  /// Throws CapacityError if the superblock count does not fit 32 bits.
  explicit RRRBitVec(const RawBitVector& v, const rrr::Tables& tables = rrr::default_tables());

  static void check_capacity(std::uint64_t len_bits);

  std::size_t size() const { return len_bits_; }
  std::uint64_t count_ones() const { return ones_; }
  std::uint64_t count_zeros() const { return len_bits_ - ones_; }
  std::size_t num_blocks() const { return (len_bits_ + kBlockBits - 1) / kBlockBits; }

  std::uint64_t rank1(std::size_t i) const;
  std::uint64_t rank0(std::size_t i) const { return i + 1 - rank1(i); }
  std::size_t select1(std::uint64_t j) const;
  std::size_t select0(std::uint64_t j) const;
  bool get_bit(std::size_t i) const;

  RankCursor rank_cursor(std::size_t start = 0) const;

  // Decodes every block back to a plain vector.
  RawBitVector decompress() const;

  unsigned block_class(std::size_t k) const { return (classes_[k / 2] >> (4 * (k % 2))) & 0xF; }
  std::span<const Superblock> superblocks() const { return supers_; }
  std::span<const std::uint32_t> select1_samples() const { return samples1_; }
  std::span<const std::uint32_t> select0_samples() const { return samples0_; }
  std::uint64_t offset_stream_bits() const { return offset_bits_; }
  // Offset of block k read straight from the stream (walks from its superblock).
  std::uint32_t block_offset(std::size_t k) const;

  SpaceReport space_report() const;

 private:
  void check_index(std::size_t i) const;
  std::uint64_t read_offset(std::uint64_t ptr, unsigned width) const;
  std::uint16_t decode(unsigned cls, std::uint64_t ptr) const;
  unsigned valid_bits(std::size_t block) const;
  std::size_t select_super1(std::uint64_t j) const;
  std::size_t select_super0(std::uint64_t j) const;
  std::uint64_t zeros_before_super(std::size_t s) const { return s * kSuperBits - supers_[s].cum_rank; }

  const rrr::Tables* tables_ = nullptr;
  std::size_t len_bits_ = 0;
  std::uint64_t ones_ = 0;
  std::vector<std::uint8_t> classes_;
  std::vector<std::uint64_t> offsets_;
  std::uint64_t offset_bits_ = 0;
  std::vector<Superblock> supers_;
  std::vector<std::uint32_t> samples1_;
  std::vector<std::uint32_t> samples0_;
};

/// Sequential rank: yields rank1(pos), rank1(pos+1), ... decoding each block
/// once and advancing the offset pointer by the class width, without
/// re-resolving superblocks.
class RRRBitVec::RankCursor {
 public:
  RankCursor() = default;

  bool done() const { return pos_ >= owner_->len_bits_; }
  std::size_t position() const { return pos_; }

  std::uint64_t next() {
    const std::uint64_t r = acc_ + popcount_word(block_ & mask_through(in_block_));
    ++pos_;
    if (++in_block_ == kBlockBits) {
      acc_ += cls_;
      ptr_ += rrr::kWidth[cls_];
      in_block_ = 0;
      ++block_index_;
      load();
    }
    return r;
  }

 private:
  friend class RRRBitVec;
  RankCursor(const RRRBitVec& owner, std::size_t start);
  void load();

  const RRRBitVec* owner_ = nullptr;
  std::size_t pos_ = 0;
  std::size_t block_index_ = 0;
  unsigned in_block_ = 0;
  unsigned cls_ = 0;
  std::uint64_t block_ = 0;
  std::uint64_t acc_ = 0;
  std::uint64_t ptr_ = 0;
};

inline RRRBitVec build_rrr(const RawBitVector& v, const rrr::Tables& tables = rrr::default_tables()) {
  return RRRBitVec(v, tables);
}

}  // namespace succinct
