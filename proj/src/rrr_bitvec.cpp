#include "succinct/rrr_bitvec.hpp"

#include <algorithm>
#include <string>

namespace succinct {

namespace {

constexpr std::uint64_t kMaxSuperblocks = std::uint64_t{1} << 32;

void append_bits(std::vector<std::uint64_t>& stream, std::uint64_t& len, std::uint64_t value, unsigned width) {
  const std::size_t wi = len / kWordBits;
  const unsigned shift = len % kWordBits;
  if (wi + 1 >= stream.size()) stream.resize(wi + 2, 0);
  stream[wi] |= value << shift;
  if (shift + width > kWordBits) stream[wi + 1] |= value >> (kWordBits - shift);
  len += width;
}

// Samples every rate-th occurrence (0-based rank multiple of rate) falling in
// [before, before + count), tagging it with `super_index`.
void sample_block(std::vector<std::uint32_t>& samples, std::uint64_t before, unsigned count,
                  std::size_t super_index) {
  while (samples.size() * RRRBitVec::kSampleRate < before + count) {
    samples.push_back(static_cast<std::uint32_t>(super_index));
  }
}

}  // namespace

void RRRBitVec::check_capacity(std::uint64_t len_bits) {
  const std::uint64_t supers = len_bits / kSuperBits + (len_bits % kSuperBits != 0);
  if (supers >= kMaxSuperblocks) {
    throw CapacityError("RRRBitVec: " + std::to_string(supers) + " superblocks do not fit 32-bit samples");
  }
}

RRRBitVec::RRRBitVec(const RawBitVector& v, const rrr::Tables& tables) : tables_(&tables), len_bits_(v.size()) {
  check_capacity(len_bits_);
  const std::size_t nblocks = num_blocks();
  classes_.assign((nblocks + 1) / 2, 0);
  supers_.reserve(nblocks / kBlocksPerSuper + 1);
  offsets_.reserve(len_bits_ / kWordBits + 2);

  std::uint64_t zeros = 0;
  for (std::size_t k = 0; k < nblocks; ++k) {
    if (k % kBlocksPerSuper == 0) supers_.push_back({ones_, offset_bits_});
    const auto x = static_cast<std::uint32_t>(v.extract(k * kBlockBits, kBlockBits));
    const unsigned c = tables.cls(x);
    classes_[k / 2] |= static_cast<std::uint8_t>(c << (4 * (k % 2)));
    if (const unsigned w = rrr::Tables::width(c); w != 0) append_bits(offsets_, offset_bits_, tables.offset(x), w);

    const unsigned z = valid_bits(k) - c;
    sample_block(samples1_, ones_, c, k / kBlocksPerSuper);
    sample_block(samples0_, zeros, z, k / kBlocksPerSuper);
    ones_ += c;
    zeros += z;
  }
  offsets_.resize((offset_bits_ + kWordBits - 1) / kWordBits + 1, 0);
  offsets_.shrink_to_fit();
}

unsigned RRRBitVec::valid_bits(std::size_t block) const {
  return static_cast<unsigned>(std::min<std::size_t>(kBlockBits, len_bits_ - block * kBlockBits));
}

void RRRBitVec::check_index(std::size_t i) const {
  if (i >= len_bits_) {
    throw IndexOutOfRange("RRRBitVec: index " + std::to_string(i) + " >= length " + std::to_string(len_bits_));
  }
}

std::uint64_t RRRBitVec::read_offset(std::uint64_t ptr, unsigned width) const {
  const std::size_t wi = ptr / kWordBits;
  const unsigned shift = ptr % kWordBits;
  std::uint64_t out = offsets_[wi] >> shift;
  if (shift + width > kWordBits) out |= offsets_[wi + 1] << (kWordBits - shift);
  return out & low_mask(width);
}

std::uint16_t RRRBitVec::decode(unsigned cls, std::uint64_t ptr) const {
  if (cls == 0) return 0;
  if (cls == rrr::kBlockBits) return rrr::kFullBlock;
  return tables_->decode(cls, static_cast<std::uint32_t>(read_offset(ptr, rrr::kWidth[cls])));
}

std::uint64_t RRRBitVec::rank1(std::size_t i) const {
  check_index(i);
  const std::size_t s = i / kSuperBits;
  const std::size_t target = i / kBlockBits;
  std::uint64_t r = supers_[s].cum_rank;
  std::uint64_t ptr = supers_[s].bit_ptr;
  for (std::size_t k = s * kBlocksPerSuper; k < target; ++k) {
    const unsigned c = block_class(k);
    r += c;
    ptr += rrr::kWidth[c];
  }
  const unsigned c = block_class(target);
  const unsigned in_block = i % kBlockBits;
  if (c == 0) return r;
  if (c == rrr::kBlockBits) return r + in_block + 1;
  return r + popcount_word(decode(c, ptr) & mask_through(in_block));
}

bool RRRBitVec::get_bit(std::size_t i) const {
  check_index(i);
  const std::size_t s = i / kSuperBits;
  const std::size_t target = i / kBlockBits;
  std::uint64_t ptr = supers_[s].bit_ptr;
  for (std::size_t k = s * kBlocksPerSuper; k < target; ++k) ptr += rrr::kWidth[block_class(k)];
  return (decode(block_class(target), ptr) >> (i % kBlockBits)) & 1U;
}

std::uint32_t RRRBitVec::block_offset(std::size_t k) const {
  if (k >= num_blocks()) throw IndexOutOfRange("RRRBitVec::block_offset: block out of range");
  const std::size_t s = k / kBlocksPerSuper;
  std::uint64_t ptr = supers_[s].bit_ptr;
  for (std::size_t b = s * kBlocksPerSuper; b < k; ++b) ptr += rrr::kWidth[block_class(b)];
  const unsigned w = rrr::kWidth[block_class(k)];
  return w == 0 ? 0 : static_cast<std::uint32_t>(read_offset(ptr, w));
}

std::size_t RRRBitVec::select_super1(std::uint64_t j) const {
  const std::size_t g = j >> kSampleShift;
  std::size_t a = samples1_[g];
  std::size_t b = (g + 1 < samples1_.size() ? samples1_[g + 1] : supers_.size() - 1) + 1;
  while (a < b) {
    const std::size_t m = a + (b - a) / 2;
    if (supers_[m].cum_rank <= j) {
      a = m + 1;
    } else {
      b = m;
    }
  }
  return a - 1;
}

std::size_t RRRBitVec::select_super0(std::uint64_t j) const {
  const std::size_t g = j >> kSampleShift;
  std::size_t a = samples0_[g];
  std::size_t b = (g + 1 < samples0_.size() ? samples0_[g + 1] : supers_.size() - 1) + 1;
  while (a < b) {
    const std::size_t m = a + (b - a) / 2;
    if (zeros_before_super(m) <= j) {
      a = m + 1;
    } else {
      b = m;
    }
  }
  return a - 1;
}

std::size_t RRRBitVec::select1(std::uint64_t j) const {
  if (j >= ones_) {
    throw RankOutOfRange("RRRBitVec::select1: j=" + std::to_string(j) + " but only " + std::to_string(ones_) +
                         " ones");
  }
  const std::size_t s = select_super1(j);
  std::uint64_t rem = j - supers_[s].cum_rank;
  std::uint64_t ptr = supers_[s].bit_ptr;
  std::size_t k = s * kBlocksPerSuper;
  unsigned c = block_class(k);
  while (rem >= c) {
    rem -= c;
    ptr += rrr::kWidth[c];
    c = block_class(++k);
  }
  return k * kBlockBits + detail::select_in_word_unchecked(decode(c, ptr), static_cast<unsigned>(rem));
}

std::size_t RRRBitVec::select0(std::uint64_t j) const {
  if (j >= count_zeros()) {
    throw RankOutOfRange("RRRBitVec::select0: j=" + std::to_string(j) + " but only " +
                         std::to_string(count_zeros()) + " zeros");
  }
  const std::size_t s = select_super0(j);
  std::uint64_t rem = j - zeros_before_super(s);
  std::uint64_t ptr = supers_[s].bit_ptr;
  std::size_t k = s * kBlocksPerSuper;
  unsigned c = block_class(k);
  // Zero count of a full block is the class complement 15 - c; only the
  // final partial block has fewer valid bits.
  while (rem >= valid_bits(k) - c) {
    rem -= valid_bits(k) - c;
    ptr += rrr::kWidth[c];
    c = block_class(++k);
  }
  const std::uint64_t zeros = ~std::uint64_t{decode(c, ptr)} & low_mask(valid_bits(k));
  return k * kBlockBits + detail::select_in_word_unchecked(zeros, static_cast<unsigned>(rem));
}

RawBitVector RRRBitVec::decompress() const {
  std::vector<std::uint64_t> words(words_for(len_bits_), 0);
  std::uint64_t ptr = 0;
  for (std::size_t k = 0; k < num_blocks(); ++k) {
    const unsigned c = block_class(k);
    const std::uint64_t x = decode(c, ptr);
    ptr += rrr::kWidth[c];
    const std::size_t pos = k * kBlockBits;
    const unsigned shift = pos % kWordBits;
    words[pos / kWordBits] |= x << shift;
    if (shift + kBlockBits > kWordBits && pos / kWordBits + 1 < words.size()) {
      words[pos / kWordBits + 1] |= x >> (kWordBits - shift);
    }
  }
  return RawBitVector::from_words(std::move(words), len_bits_);
}

RRRBitVec::RankCursor RRRBitVec::rank_cursor(std::size_t start) const {
  if (start > len_bits_) {
    throw IndexOutOfRange("RRRBitVec::rank_cursor: start " + std::to_string(start) + " > length " +
                          std::to_string(len_bits_));
  }
  return RankCursor(*this, start);
}

RRRBitVec::RankCursor::RankCursor(const RRRBitVec& owner, std::size_t start) : owner_(&owner), pos_(start) {
  if (start >= owner.len_bits_) return;
  const std::size_t s = start / kSuperBits;
  acc_ = owner.supers_[s].cum_rank;
  ptr_ = owner.supers_[s].bit_ptr;
  block_index_ = s * kBlocksPerSuper;
  for (; block_index_ < start / kBlockBits; ++block_index_) {
    const unsigned c = owner.block_class(block_index_);
    acc_ += c;
    ptr_ += rrr::kWidth[c];
  }
  in_block_ = start % kBlockBits;
  load();
}

void RRRBitVec::RankCursor::load() {
  if (block_index_ >= owner_->num_blocks()) return;
  cls_ = owner_->block_class(block_index_);
  block_ = owner_->decode(cls_, ptr_);
}

SpaceReport RRRBitVec::space_report() const {
  require_nonempty_for_report(len_bits_, "RRRBitVec::space_report");
  SpaceReport r;
  r.len_bits = len_bits_;
  r.offsets = bits_per_element(static_cast<double>(offset_bits_), len_bits_);
  r.structural = bits_per_element(4.0 * static_cast<double>(num_blocks()) + 128.0 * static_cast<double>(supers_.size()),
                                  len_bits_);
  r.select1_samples = bits_per_element(32.0 * static_cast<double>(samples1_.size()), len_bits_);
  r.select0_samples = bits_per_element(32.0 * static_cast<double>(samples0_.size()), len_bits_);
  return r;
}

}  // namespace succinct
