#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "succinct/bits.hpp"

namespace succinct::detail {

/// Two-level cumulative rank directory shared by BlockBitVec and FastBitVec:
/// a 64-bit absolute count per superblock and a 16-bit count per block,
/// relative to the enclosing superblock.
template <std::size_t SuperBits, std::size_t BlockBits>
class RankDirectory {
  static_assert(SuperBits % BlockBits == 0 && BlockBits % kWordBits == 0);
  static_assert(SuperBits <= 65535, "relative block counts must fit 16 bits");

 public:
  static constexpr std::size_t kSuperBits = SuperBits;
  static constexpr std::size_t kBlockBits = BlockBits;
  static constexpr std::size_t kWordsPerBlock = BlockBits / kWordBits;
  static constexpr std::size_t kWordsPerSuper = SuperBits / kWordBits;
  static constexpr std::size_t kBlocksPerSuper = SuperBits / BlockBits;

  // visit(word_index, word, ones_before_word) runs once per word, in order,
  // so callers can build sample arrays in the same pass.
  template <typename Visitor>
  std::uint64_t build(std::span<const std::uint64_t> words, Visitor&& visit) {
    super_.clear();
    block_.clear();
    super_.reserve((words.size() + kWordsPerSuper - 1) / kWordsPerSuper);
    block_.reserve((words.size() + kWordsPerBlock - 1) / kWordsPerBlock);
    std::uint64_t total = 0;
    for (std::size_t wi = 0; wi < words.size(); ++wi) {
      if (wi % kWordsPerSuper == 0) super_.push_back(total);
      if (wi % kWordsPerBlock == 0) block_.push_back(static_cast<std::uint16_t>(total - super_.back()));
      visit(wi, words[wi], total);
      total += popcount_word(words[wi]);
    }
    return total;
  }

  // Inclusive range of word indexes rank1(i) popcounts.
  static constexpr std::pair<std::size_t, std::size_t> scan_words(std::size_t i) {
    return {(i / BlockBits) * kWordsPerBlock, i / kWordBits};
  }

  std::uint64_t rank1(const std::uint64_t* words, std::size_t i) const {
    const auto [first, last] = scan_words(i);
    std::uint64_t r = super_[i / SuperBits] + block_[i / BlockBits];
    for (std::size_t w = first; w < last; ++w) r += popcount_word(words[w]);
    return r + popcount_word(words[last] & mask_through(i % kWordBits));
  }

  // Position of the (j+1)-th one, given that it lies in superblocks [lo, hi]
  // and super_[lo] <= j.
  std::size_t select1(const std::uint64_t* words, std::size_t lo, std::size_t hi, std::uint64_t j) const {
    // Leftmost superblock whose cumulative count reaches j+1, minus one.
    std::size_t a = lo, b = hi + 1;
    while (a < b) {
      const std::size_t m = a + (b - a) / 2;
      if (super_[m] <= j) {
        a = m + 1;
      } else {
        b = m;
      }
    }
    const std::size_t s = a - 1;
    std::uint64_t rem = j - super_[s];

    std::size_t blk = s * kBlocksPerSuper;
    const std::size_t blk_end = std::min(blk + kBlocksPerSuper, block_.size());
    while (blk + 1 < blk_end && block_[blk + 1] <= rem) ++blk;
    rem -= block_[blk];

    for (std::size_t w = blk * kWordsPerBlock;; ++w) {
      const unsigned c = popcount_word(words[w]);
      if (rem < c) return w * kWordBits + select_in_word_unchecked(words[w], static_cast<unsigned>(rem));
      rem -= c;
    }
  }

  // Zero-bit counterpart of select1 over implied zero counts.
  std::size_t select0(const std::uint64_t* words, std::size_t lo, std::size_t hi, std::uint64_t j) const {
    std::size_t a = lo, b = hi + 1;
    while (a < b) {
      const std::size_t m = a + (b - a) / 2;
      if (zeros_before_super(m) <= j) {
        a = m + 1;
      } else {
        b = m;
      }
    }
    const std::size_t s = a - 1;
    std::uint64_t rem = j - zeros_before_super(s);

    const std::size_t blk0 = s * kBlocksPerSuper;
    const std::size_t blk_end = std::min(blk0 + kBlocksPerSuper, block_.size());
    std::size_t blk = blk0;
    while (blk + 1 < blk_end && zeros_in_super_before_block(blk0, blk + 1) <= rem) ++blk;
    rem -= zeros_in_super_before_block(blk0, blk);

    // Padding bits of the last word flip to ones under ~, but j < total zeros
    // keeps the answer among valid bits.
    for (std::size_t w = blk * kWordsPerBlock;; ++w) {
      const std::uint64_t inv = ~words[w];
      const unsigned c = popcount_word(inv);
      if (rem < c) return w * kWordBits + select_in_word_unchecked(inv, static_cast<unsigned>(rem));
      rem -= c;
    }
  }

  std::span<const std::uint64_t> super_ranks() const { return super_; }
  std::span<const std::uint16_t> block_ranks() const { return block_; }
  std::size_t num_supers() const { return super_.size(); }
  std::size_t index_bits() const { return 64 * super_.size() + 16 * block_.size(); }

 private:
  std::uint64_t zeros_before_super(std::size_t s) const { return s * SuperBits - super_[s]; }
  std::uint64_t zeros_in_super_before_block(std::size_t blk0, std::size_t blk) const {
    return (blk - blk0) * BlockBits - block_[blk];
  }

  std::vector<std::uint64_t> super_;
  std::vector<std::uint16_t> block_;
};

/// Sequential rank over raw words: yields rank1(pos), rank1(pos+1), ...
/// without consulting any directory after the starting point.
class WordRankCursor {
 public:
  WordRankCursor() = default;
  WordRankCursor(std::span<const std::uint64_t> words, std::size_t len_bits, std::size_t start,
                 std::uint64_t ones_before_word)
      : words_(words.data()), pos_(start), end_(len_bits), acc_(ones_before_word),
        cur_(start < len_bits ? words[start / kWordBits] : 0) {}

  bool done() const { return pos_ >= end_; }
  std::size_t position() const { return pos_; }

  // rank1(position()), then advance by one bit. Requires !done().
  std::uint64_t next() {
    const unsigned off = pos_ % kWordBits;
    const std::uint64_t r = acc_ + popcount_word(cur_ & mask_through(off));
    ++pos_;
    if (off == kWordBits - 1) {
      acc_ += popcount_word(cur_);
      cur_ = pos_ < end_ ? words_[pos_ / kWordBits] : 0;
    }
    return r;
  }

 private:
  const std::uint64_t* words_ = nullptr;
  std::size_t pos_ = 0;
  std::size_t end_ = 0;
  std::uint64_t acc_ = 0;
  std::uint64_t cur_ = 0;
};

}  // namespace succinct::detail
