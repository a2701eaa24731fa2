#include "succinct/fast_bitvec.hpp"

#include <string>

namespace succinct {

namespace {

// Appends the position of every occurrence whose 0-based rank is a multiple
// of the sample rate among the set bits of `w`.
void sample_word(std::vector<std::uint32_t>& samples, std::size_t word_index, std::uint64_t w,
                 std::uint64_t before) {
  const std::uint64_t after = before + popcount_word(w);
  for (std::uint64_t target = samples.size() * FastBitVec::kSampleRate; target < after;
       target += FastBitVec::kSampleRate) {
    const unsigned bit = detail::select_in_word_unchecked(w, static_cast<unsigned>(target - before));
    samples.push_back(static_cast<std::uint32_t>(word_index * kWordBits + bit));
  }
}

}  // namespace

void FastBitVec::check_capacity(std::uint64_t len_bits) {
  if (len_bits >= kMaxLength) {
    throw CapacityError("FastBitVec: length " + std::to_string(len_bits) +
                        " does not fit 32-bit sample positions");
  }
}

FastBitVec::FastBitVec(RawBitVector raw) : raw_(std::move(raw)) {
  check_capacity(raw_.size());
  const std::size_t n = raw_.size();
  const std::size_t last_word = raw_.words().size() - (n == 0 ? 0 : 1);
  const std::uint64_t tail_mask = n % kWordBits == 0 ? ~std::uint64_t{0} : low_mask(n % kWordBits);
  samples1_.reserve(n / kSampleRate / 2 + 1);
  samples0_.reserve(n / kSampleRate / 2 + 1);
  ones_ = dir_.build(raw_.words(), [&](std::size_t wi, std::uint64_t w, std::uint64_t ones_before) {
    sample_word(samples1_, wi, w, ones_before);
    const std::uint64_t zeros = ~w & (wi == last_word ? tail_mask : ~std::uint64_t{0});
    sample_word(samples0_, wi, zeros, wi * kWordBits - ones_before);
  });
}

void FastBitVec::throw_index(std::size_t i) const {
  throw IndexOutOfRange("FastBitVec: index " + std::to_string(i) + " >= length " + std::to_string(raw_.size()));
}

std::pair<std::size_t, std::size_t> FastBitVec::window(std::span<const std::uint32_t> samples,
                                                       std::uint64_t j) const {
  const std::size_t g = j >> kSampleShift;
  const std::size_t hi = g + 1 < samples.size() ? samples[g + 1] : raw_.size() - 1;
  return {samples[g], hi};
}

std::pair<std::size_t, std::size_t> FastBitVec::select1_window(std::uint64_t j) const {
  if (j >= ones_) throw RankOutOfRange("FastBitVec::select1_window: j out of range");
  return window(samples1_, j);
}

std::pair<std::size_t, std::size_t> FastBitVec::select0_window(std::uint64_t j) const {
  if (j >= count_zeros()) throw RankOutOfRange("FastBitVec::select0_window: j out of range");
  return window(samples0_, j);
}

std::size_t FastBitVec::select1(std::uint64_t j) const {
  if (j >= ones_) {
    throw RankOutOfRange("FastBitVec::select1: j=" + std::to_string(j) + " but only " + std::to_string(ones_) +
                         " ones");
  }
  const auto [lo, hi] = window(samples1_, j);
  return dir_.select1(raw_.words().data(), lo / kSuperBits, hi / kSuperBits, j);
}

std::size_t FastBitVec::select0(std::uint64_t j) const {
  if (j >= count_zeros()) {
    throw RankOutOfRange("FastBitVec::select0: j=" + std::to_string(j) + " but only " +
                         std::to_string(count_zeros()) + " zeros");
  }
  const auto [lo, hi] = window(samples0_, j);
  return dir_.select0(raw_.words().data(), lo / kSuperBits, hi / kSuperBits, j);
}

FastBitVec::RankCursor FastBitVec::rank_cursor(std::size_t start) const {
  if (start > raw_.size()) throw_index(start);
  const std::size_t word_start = (start / kWordBits) * kWordBits;
  const std::uint64_t before = word_start == 0 ? 0 : rank1(word_start - 1);
  return RankCursor(raw_.words(), raw_.size(), start, before);
}

SpaceReport FastBitVec::space_report() const {
  require_nonempty_for_report(raw_.size(), "FastBitVec::space_report");
  SpaceReport r;
  r.len_bits = raw_.size();
  r.raw = 1.0;
  r.rank_index = bits_per_element(static_cast<double>(dir_.index_bits()), raw_.size());
  r.select1_samples = bits_per_element(32.0 * static_cast<double>(samples1_.size()), raw_.size());
  r.select0_samples = bits_per_element(32.0 * static_cast<double>(samples0_.size()), raw_.size());
  return r;
}

}  // namespace succinct
