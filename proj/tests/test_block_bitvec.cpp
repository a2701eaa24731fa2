#include <gtest/gtest.h>

#include <random>

#include "succinct/block_bitvec.hpp"
#include "succinct/oracle.hpp"

using namespace succinct;

namespace {

// Per-bit prefix sums at every `stride`-aligned position, relative to the
// enclosing `group`-aligned position.
std::vector<std::uint64_t> prefix_counts(const RawBitVector& v, std::size_t stride, std::size_t group) {
  std::vector<std::uint64_t> out;
  std::uint64_t total = 0, at_group = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i % group == 0) at_group = total;
    if (i % stride == 0) out.push_back(total - at_group);
    total += v.get_bit(i);
  }
  return out;
}

}  // namespace

TEST(BlockBitVec, EmptyVector) {
  const BlockBitVec b{RawBitVector()};
  EXPECT_TRUE(b.super_ranks().empty());
  EXPECT_TRUE(b.block_ranks().empty());
  EXPECT_THROW(b.rank1(0), IndexOutOfRange);
  EXPECT_THROW(b.select1(0), RankOutOfRange);
  EXPECT_THROW(b.select0(0), RankOutOfRange);
  EXPECT_THROW(b.space_report(), UndefinedReport);
}

TEST(BlockBitVec, AllOnesDirectories) {
  const RawBitVector v(4096, true);
  const BlockBitVec b(v);
  const auto supers = prefix_counts(v, 2048, ~std::size_t{0});
  const auto blocks = prefix_counts(v, 512, 2048);
  ASSERT_EQ(supers, (std::vector<std::uint64_t>{0, 2048}));
  ASSERT_EQ(blocks, (std::vector<std::uint64_t>{0, 512, 1024, 1536, 0, 512, 1024, 1536}));
  EXPECT_TRUE(std::equal(b.super_ranks().begin(), b.super_ranks().end(), supers.begin(), supers.end()));
  EXPECT_TRUE(std::equal(b.block_ranks().begin(), b.block_ranks().end(), blocks.begin(), blocks.end()));
}

TEST(BlockBitVec, DirectoriesMatchPrefixOracleOnRandomVector) {
  const auto v = generate({21, 0.37, 100'003});
  const BlockBitVec b(v);
  const auto supers = prefix_counts(v, 2048, ~std::size_t{0});
  const auto blocks = prefix_counts(v, 512, 2048);
  EXPECT_TRUE(std::equal(b.super_ranks().begin(), b.super_ranks().end(), supers.begin(), supers.end()));
  EXPECT_TRUE(std::equal(b.block_ranks().begin(), b.block_ranks().end(), blocks.begin(), blocks.end()));
}

TEST(BlockBitVec, SmallExamples) {
  const BlockBitVec b(RawBitVector::from_string("1011"));
  EXPECT_EQ(b.rank1(2), 2u);
  EXPECT_EQ(b.rank0(1), 1u);
  EXPECT_EQ(b.select1(1), 2u);
  EXPECT_EQ(b.select0(0), 1u);
  EXPECT_THROW(b.rank1(4), IndexOutOfRange);
  EXPECT_THROW(b.rank0(4), IndexOutOfRange);
  EXPECT_THROW(b.select1(3), RankOutOfRange);
  EXPECT_THROW(b.select0(1), RankOutOfRange);
}

TEST(BlockBitVec, BoundaryLengths) {
  EXPECT_EQ(BlockBitVec(RawBitVector(4097, true)).rank1(4096), 4097u);
  EXPECT_EQ(BlockBitVec(RawBitVector(240)).rank0(239), 240u);
  EXPECT_EQ(BlockBitVec(RawBitVector(17)).select0(16), 16u);
}

TEST(BlockBitVec, SingleBitSelect) {
  for (std::size_t p = 0; p < 4097; ++p) {
    RawBitVector v(4097);
    v.set_bit(p, true);
    const BlockBitVec b(std::move(v));
    ASSERT_EQ(b.select1(0), p);
    ASSERT_EQ(b.rank1(p), 1u);
    if (p > 0) {
      ASSERT_EQ(b.rank1(p - 1), 0u);
    }
  }
}

TEST(BlockBitVec, MatchesOracleOnRandomVector) {
  const auto v = generate({8, 0.5, 250'000});
  const BlockBitVec b(v);
  const OracleBitVec o(v);
  for (std::size_t i = 0; i < v.size(); ++i) ASSERT_EQ(b.rank1(i), o.rank1(i)) << i;
  for (std::uint64_t j = 0; j < o.count_ones(); j += 7) ASSERT_EQ(b.select1(j), o.select1(j)) << j;
  for (std::uint64_t j = 0; j < o.count_zeros(); j += 7) ASSERT_EQ(b.select0(j), o.select0(j)) << j;
}

TEST(BlockBitVec, DualityProperties) {
  std::mt19937_64 rng(3);
  for (double d : {0.01, 0.5, 0.99}) {
    const BlockBitVec b(generate({rng(), d, 30'011}));
    std::size_t prev = 0;
    for (std::uint64_t j = 0; j < b.count_ones(); ++j) {
      const std::size_t p = b.select1(j);
      ASSERT_TRUE(b.get_bit(p));
      ASSERT_EQ(b.rank1(p), j + 1);
      if (j > 0) {
        ASSERT_GT(p, prev);
      }
      prev = p;
    }
    for (std::size_t i = 0; i < b.size(); ++i) ASSERT_EQ(b.rank1(i) + b.rank0(i), i + 1);
  }
}

TEST(BlockBitVec, RankScansAtMostEightWords) {
  for (std::size_t i = 0; i < 3 * 2048; ++i) {
    const auto [first, last] = BlockBitVec::rank_scan_words(i);
    ASSERT_LE(first, last);
    ASSERT_LE(last - first + 1, BlockBitVec::kMaxRankWords);
    ASSERT_EQ(first * 64, (i / 512) * 512);
  }
  EXPECT_EQ(BlockBitVec::kMaxRankWords, 8u);
}

TEST(BlockBitVec, RankCursorMatchesRank) {
  const BlockBitVec b(generate({4, 0.5, 5'003}));
  for (std::size_t start : {0u, 1u, 63u, 64u, 2047u, 5002u}) {
    auto c = b.rank_cursor(start);
    for (std::size_t i = start; i < b.size(); ++i) {
      ASSERT_FALSE(c.done());
      ASSERT_EQ(c.next(), b.rank1(i)) << start << " " << i;
    }
    EXPECT_TRUE(c.done());
  }
  EXPECT_TRUE(b.rank_cursor(b.size()).done());
  EXPECT_THROW(b.rank_cursor(b.size() + 1), IndexOutOfRange);
}

TEST(BlockBitVec, SpaceReport) {
  // Hand count for one full superblock: one 64-bit entry, four 16-bit entries.
  const auto exact = BlockBitVec(RawBitVector(2048)).space_report();
  EXPECT_DOUBLE_EQ(*exact.rank_index, (64.0 + 4 * 16.0) / 2048.0);
  EXPECT_DOUBLE_EQ(*exact.rank_index, 0.0625);

  const auto r = BlockBitVec(generate({1, 0.5, 1'000'000})).space_report();
  EXPECT_DOUBLE_EQ(*r.raw, 1.0);
  EXPECT_NEAR(*r.rank_index, 0.0625, 0.001);
  EXPECT_NEAR(r.total(), 1.063, 0.001);
  EXPECT_DOUBLE_EQ(r.select_index(), 0.0);
}
