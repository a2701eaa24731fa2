#include <gtest/gtest.h>

#include <random>

#include "succinct/block_bitvec.hpp"
#include "succinct/fast_bitvec.hpp"
#include "succinct/oracle.hpp"

using namespace succinct;

TEST(FastBitVec, SampleArraysByDefinition) {
  const FastBitVec f(RawBitVector(512, true));
  ASSERT_EQ(f.select1_samples().size(), 2u);
  EXPECT_EQ(f.select1_samples()[0], 0u);
  EXPECT_EQ(f.select1_samples()[1], 256u);
  EXPECT_TRUE(f.select0_samples().empty());
  EXPECT_EQ(f.select1(256), 256u);
}

TEST(FastBitVec, SamplesAreEvery256thOccurrence) {
  const auto v = generate({17, 0.3, 70'001});
  const FastBitVec f(v);
  const OracleBitVec o(v);
  ASSERT_EQ(f.select1_samples().size(), (o.count_ones() + 255) / 256);
  ASSERT_EQ(f.select0_samples().size(), (o.count_zeros() + 255) / 256);
  for (std::size_t k = 0; k < f.select1_samples().size(); ++k) {
    ASSERT_EQ(f.select1_samples()[k], o.select1(256 * k));
    if (k > 0) {
      ASSERT_GT(f.select1_samples()[k], f.select1_samples()[k - 1]);
    }
  }
  for (std::size_t k = 0; k < f.select0_samples().size(); ++k) ASSERT_EQ(f.select0_samples()[k], o.select0(256 * k));
}

TEST(FastBitVec, SmallExamples) {
  const FastBitVec f(RawBitVector::from_string("1011"));
  EXPECT_EQ(f.rank1(2), 2u);
  EXPECT_EQ(f.rank0(1), 1u);
  EXPECT_EQ(f.select1(1), 2u);
  EXPECT_EQ(f.select0(0), 1u);
  EXPECT_THROW(f.rank1(4), IndexOutOfRange);
  EXPECT_THROW(f.select1(3), RankOutOfRange);
  EXPECT_THROW(f.select0(1), RankOutOfRange);

  EXPECT_EQ(FastBitVec(RawBitVector(4097, true)).rank1(4095), 4096u);
  EXPECT_EQ(FastBitVec(RawBitVector(241)).select0(240), 240u);
}

TEST(FastBitVec, EmptyVector) {
  const FastBitVec f{RawBitVector()};
  EXPECT_THROW(f.rank1(0), IndexOutOfRange);
  EXPECT_THROW(f.select1(0), RankOutOfRange);
  EXPECT_THROW(f.space_report(), UndefinedReport);
}

TEST(FastBitVec, CapacityLimit) {
  EXPECT_NO_THROW(FastBitVec::check_capacity((std::uint64_t{1} << 32) - 1));
  EXPECT_THROW(FastBitVec::check_capacity(std::uint64_t{1} << 32), CapacityError);
}

TEST(FastBitVec, SingleBitWalk) {
  for (std::size_t p = 0; p < 240; ++p) {
    RawBitVector v(240);
    v.set_bit(p, true);
    const FastBitVec f(std::move(v));
    ASSERT_EQ(f.select1(0), p);
    ASSERT_EQ(f.select0(p == 0 ? 0 : p - 1), p == 0 ? 1 : p - 1);
  }
}

TEST(FastBitVec, AgreesWithBlockAndOracleAcrossDensities) {
  std::mt19937_64 rng(9);
  for (double d : {0.01, 0.05, 0.1, 0.25, 0.5, 0.75, 0.9, 0.95, 0.99}) {
    const auto v = generate({rng(), d, 250'000});
    const FastBitVec f(v);
    const BlockBitVec b(v);
    const OracleBitVec o(v);
    for (std::size_t i = 0; i < v.size(); i += 3) {
      ASSERT_EQ(f.rank1(i), o.rank1(i));
      ASSERT_EQ(f.rank1(i), b.rank1(i));
    }
    for (std::uint64_t j = 0; j < o.count_ones(); j += 5) ASSERT_EQ(f.select1(j), o.select1(j)) << d << " " << j;
    for (std::uint64_t j = 0; j < o.count_zeros(); j += 5) ASSERT_EQ(f.select0(j), o.select0(j)) << d << " " << j;
  }
}

TEST(FastBitVec, AnswerLiesInSampledWindow) {
  const auto v = generate({2, 0.2, 200'003});
  const FastBitVec f(v);
  for (std::uint64_t j = 0; j < f.count_ones(); ++j) {
    const auto [lo, hi] = f.select1_window(j);
    const std::size_t p = f.select1(j);
    ASSERT_LE(lo, p);
    ASSERT_LE(p, hi);
  }
  for (std::uint64_t j = 0; j < f.count_zeros(); j += 3) {
    const auto [lo, hi] = f.select0_window(j);
    const std::size_t p = f.select0(j);
    ASSERT_LE(lo, p);
    ASSERT_LE(p, hi);
  }
  // Last sample group has no successor: upper bound clamps to N - 1.
  EXPECT_EQ(f.select1_window(f.count_ones() - 1).second, f.size() - 1);
}

TEST(FastBitVec, RankScansAtMostFourWords) {
  for (std::size_t i = 0; i < 2 * 4096; ++i) {
    const auto [first, last] = FastBitVec::rank_scan_words(i);
    ASSERT_LE(last - first + 1, FastBitVec::kMaxRankWords);
  }
  EXPECT_EQ(FastBitVec::kMaxRankWords, 4u);
}

TEST(FastBitVec, RankCursorMatchesRank) {
  const FastBitVec f(generate({6, 0.7, 9'001}));
  auto c = f.rank_cursor(100);
  for (std::size_t i = 100; i < f.size(); ++i) ASSERT_EQ(c.next(), f.rank1(i));
  EXPECT_TRUE(c.done());
}

TEST(FastBitVec, SpaceReport) {
  // Multiple of 4096: the rank index is bit-exact.
  const auto exact = FastBitVec(generate({1, 0.5, 4096 * 64})).space_report();
  EXPECT_DOUBLE_EQ(*exact.rank_index, 64.0 / 4096 + 16.0 / 256);
  EXPECT_DOUBLE_EQ(*exact.rank_index, 0.078125);

  const auto r = FastBitVec(generate({1, 0.5, 1'000'000})).space_report();
  EXPECT_NEAR(*r.rank_index, 0.078125, 0.0005);
  EXPECT_NEAR(*r.select1_samples, 32 * 0.5 / 256, 0.001);
  EXPECT_NEAR(*r.select0_samples, 32 * 0.5 / 256, 0.001);
  EXPECT_NEAR(r.total_excluding_select0(), 1.141, 0.002);

  const auto sparse = FastBitVec(RawBitVector(10'000)).space_report();
  EXPECT_DOUBLE_EQ(*sparse.select1_samples, 0.0);
}
