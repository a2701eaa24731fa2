#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "succinct/bits.hpp"

namespace succinct {

// Reference rank/select by direct per-bit scans: no popcount, no word
// arithmetic. O(N) per call.
std::uint64_t naive_rank1(const RawBitVector& v, std::size_t i);
std::uint64_t naive_rank0(const RawBitVector& v, std::size_t i);
std::size_t naive_select1(const RawBitVector& v, std::uint64_t j);
std::size_t naive_select0(const RawBitVector& v, std::uint64_t j);

/// Ground truth for differential tests. One per-bit scan at construction
/// records prefix counts and the positions of every one and zero; queries
/// then read those tables. Error contracts match the indexed structures.
class OracleBitVec {
 public:
  explicit OracleBitVec(RawBitVector raw);

  std::size_t size() const { return raw_.size(); }
  std::uint64_t count_ones() const { return one_positions_.size(); }
  std::uint64_t count_zeros() const { return zero_positions_.size(); }
  const RawBitVector& raw() const { return raw_; }

  std::uint64_t rank1(std::size_t i) const;
  std::uint64_t rank0(std::size_t i) const;
  std::size_t select1(std::uint64_t j) const;
  std::size_t select0(std::uint64_t j) const;

 private:
  RawBitVector raw_;
  std::vector<std::uint32_t> inclusive_ones_;
  std::vector<std::size_t> one_positions_;
  std::vector<std::size_t> zero_positions_;
};

}  // namespace succinct
