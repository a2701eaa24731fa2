#include "succinct/block_bitvec.hpp"

namespace succinct {

BlockBitVec::BlockBitVec(RawBitVector raw) : raw_(std::move(raw)) {
  ones_ = dir_.build(raw_.words(), [](std::size_t, std::uint64_t, std::uint64_t) {});
}

void BlockBitVec::throw_index(std::size_t i) const {
  throw IndexOutOfRange("BlockBitVec: index " + std::to_string(i) + " >= length " + std::to_string(raw_.size()));
}

std::size_t BlockBitVec::select1(std::uint64_t j) const {
  if (j >= ones_) {
    throw RankOutOfRange("BlockBitVec::select1: j=" + std::to_string(j) + " but only " + std::to_string(ones_) +
                         " ones");
  }
  return dir_.select1(raw_.words().data(), 0, dir_.num_supers() - 1, j);
}

std::size_t BlockBitVec::select0(std::uint64_t j) const {
  if (j >= count_zeros()) {
    throw RankOutOfRange("BlockBitVec::select0: j=" + std::to_string(j) + " but only " +
                         std::to_string(count_zeros()) + " zeros");
  }
  return dir_.select0(raw_.words().data(), 0, dir_.num_supers() - 1, j);
}

BlockBitVec::RankCursor BlockBitVec::rank_cursor(std::size_t start) const {
  if (start > raw_.size()) throw_index(start);
  const std::size_t word_start = (start / kWordBits) * kWordBits;
  const std::uint64_t before = word_start == 0 ? 0 : rank1(word_start - 1);
  return RankCursor(raw_.words(), raw_.size(), start, before);
}

SpaceReport BlockBitVec::space_report() const {
  require_nonempty_for_report(raw_.size(), "BlockBitVec::space_report");
  SpaceReport r;
  r.len_bits = raw_.size();
  r.raw = 1.0;
  r.rank_index = bits_per_element(static_cast<double>(dir_.index_bits()), raw_.size());
  r.select1_samples = 0.0;
  r.select0_samples = 0.0;
  return r;
}

}  // namespace succinct
