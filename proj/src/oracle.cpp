#include "succinct/oracle.hpp"

#include <string>

namespace succinct {

namespace {

[[noreturn]] void index_error(const char* who, std::size_t i, std::size_t n) {
  throw IndexOutOfRange(std::string(who) + ": index " + std::to_string(i) + " >= length " + std::to_string(n));
}

[[noreturn]] void rank_error(const char* who, std::uint64_t j) {
  throw RankOutOfRange(std::string(who) + ": no occurrence with rank " + std::to_string(j));
}

}  // namespace

std::uint64_t naive_rank1(const RawBitVector& v, std::size_t i) {
  if (i >= v.size()) index_error("naive_rank1", i, v.size());
  std::uint64_t count = 0;
  for (std::size_t p = 0; p <= i; ++p) count += v.get_bit(p) ? 1 : 0;
  return count;
}

std::uint64_t naive_rank0(const RawBitVector& v, std::size_t i) {
  if (i >= v.size()) index_error("naive_rank0", i, v.size());
  std::uint64_t count = 0;
  for (std::size_t p = 0; p <= i; ++p) count += v.get_bit(p) ? 0 : 1;
  return count;
}

std::size_t naive_select1(const RawBitVector& v, std::uint64_t j) {
  std::uint64_t seen = 0;
  for (std::size_t p = 0; p < v.size(); ++p) {
    if (v.get_bit(p) && ++seen == j + 1) return p;
  }
  rank_error("naive_select1", j);
}

std::size_t naive_select0(const RawBitVector& v, std::uint64_t j) {
  std::uint64_t seen = 0;
  for (std::size_t p = 0; p < v.size(); ++p) {
    if (!v.get_bit(p) && ++seen == j + 1) return p;
  }
  rank_error("naive_select0", j);
}

OracleBitVec::OracleBitVec(RawBitVector raw) : raw_(std::move(raw)) {
  inclusive_ones_.reserve(raw_.size());
  std::uint32_t running = 0;
  for (std::size_t p = 0; p < raw_.size(); ++p) {
    if (raw_.get_bit(p)) {
      ++running;
      one_positions_.push_back(p);
    } else {
      zero_positions_.push_back(p);
    }
    inclusive_ones_.push_back(running);
  }
}

std::uint64_t OracleBitVec::rank1(std::size_t i) const {
  if (i >= raw_.size()) index_error("OracleBitVec::rank1", i, raw_.size());
  return inclusive_ones_[i];
}

std::uint64_t OracleBitVec::rank0(std::size_t i) const {
  if (i >= raw_.size()) index_error("OracleBitVec::rank0", i, raw_.size());
  return i + 1 - inclusive_ones_[i];
}

std::size_t OracleBitVec::select1(std::uint64_t j) const {
  if (j >= one_positions_.size()) rank_error("OracleBitVec::select1", j);
  return one_positions_[j];
}

std::size_t OracleBitVec::select0(std::uint64_t j) const {
  if (j >= zero_positions_.size()) rank_error("OracleBitVec::select0", j);
  return zero_positions_[j];
}

}  // namespace succinct
