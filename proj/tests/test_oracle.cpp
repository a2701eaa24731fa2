#include <gtest/gtest.h>

#include "succinct/oracle.hpp"

using namespace succinct;

TEST(Naive, Examples) {
  const auto v = RawBitVector::from_string("1011");
  EXPECT_EQ(naive_rank1(v, 2), 2u);
  EXPECT_EQ(naive_rank0(v, 1), 1u);
  EXPECT_EQ(naive_select1(v, 1), 2u);
  EXPECT_EQ(naive_select0(v, 0), 1u);
  EXPECT_THROW(naive_rank1(v, 4), IndexOutOfRange);
  EXPECT_THROW(naive_select1(v, 3), RankOutOfRange);
  EXPECT_THROW(naive_select0(v, 1), RankOutOfRange);
}

TEST(OracleBitVec, AgreesWithNaiveScans) {
  for (std::size_t len : {1u, 17u, 300u, 2'001u}) {
    const auto v = generate({len, 0.45, len});
    const OracleBitVec o(v);
    for (std::size_t i = 0; i < len; ++i) {
      ASSERT_EQ(o.rank1(i), naive_rank1(v, i));
      ASSERT_EQ(o.rank0(i), naive_rank0(v, i));
    }
    for (std::uint64_t j = 0; j < o.count_ones(); ++j) ASSERT_EQ(o.select1(j), naive_select1(v, j));
    for (std::uint64_t j = 0; j < o.count_zeros(); ++j) ASSERT_EQ(o.select0(j), naive_select0(v, j));
  }
}

TEST(OracleBitVec, ErrorContracts) {
  const OracleBitVec o(RawBitVector(10, true));
  EXPECT_EQ(o.count_zeros(), 0u);
  EXPECT_THROW(o.rank1(10), IndexOutOfRange);
  EXPECT_THROW(o.rank0(10), IndexOutOfRange);
  EXPECT_THROW(o.select1(10), RankOutOfRange);
  EXPECT_THROW(o.select0(0), RankOutOfRange);
  const OracleBitVec empty{RawBitVector()};
  EXPECT_THROW(empty.rank1(0), IndexOutOfRange);
}
