#include <gtest/gtest.h>

#include <bit>
#include <random>

#include "succinct/oracle.hpp"
#include "succinct/rrr_bitvec.hpp"

using namespace succinct;

namespace {

// 15-bit block k read bit by bit, zero past N.
std::uint32_t block_bits(const RawBitVector& v, std::size_t k) {
  std::uint32_t x = 0;
  for (std::size_t b = 0; b < 15; ++b) {
    const std::size_t i = 15 * k + b;
    if (i < v.size() && v.get_bit(i)) x |= 1u << b;
  }
  return x;
}

}  // namespace

TEST(RRRBitVec, AllZerosAndAllOnesCarryNoOffsets) {
  const RRRBitVec zeros(RawBitVector(240));
  const RRRBitVec ones(RawBitVector(240, true));
  EXPECT_EQ(zeros.offset_stream_bits(), 0u);
  EXPECT_EQ(ones.offset_stream_bits(), 0u);
  for (std::size_t k = 0; k < 16; ++k) {
    EXPECT_EQ(zeros.block_class(k), 0u);
    EXPECT_EQ(ones.block_class(k), 15u);
  }
  EXPECT_EQ(ones.rank1(239), 240u);
  EXPECT_EQ(ones.select1(239), 239u);
  EXPECT_EQ(zeros.select0(100), 100u);
  EXPECT_THROW(ones.select0(0), RankOutOfRange);
}

TEST(RRRBitVec, PartialFinalBlock) {
  RawBitVector v(241, true);
  const RRRBitVec r(v);
  ASSERT_EQ(r.num_blocks(), 17u);
  EXPECT_EQ(r.block_class(16), 1u);  // one real bit, fourteen zero pads
  EXPECT_EQ(r.rank1(240), 241u);
  EXPECT_EQ(r.select1(240), 240u);
  EXPECT_THROW(r.rank1(241), IndexOutOfRange);
  EXPECT_THROW(r.select0(0), RankOutOfRange);
  EXPECT_EQ(r.superblocks().size(), 2u);
  EXPECT_EQ(r.superblocks()[1].cum_rank, 240u);
}

TEST(RRRBitVec, SmallExamples) {
  const RRRBitVec r(RawBitVector::from_string("1011"));
  EXPECT_EQ(r.rank1(2), 2u);
  EXPECT_EQ(r.rank0(1), 1u);
  EXPECT_EQ(r.select1(1), 2u);
  EXPECT_EQ(r.select0(0), 1u);
  EXPECT_THROW(r.select0(1), RankOutOfRange);
  EXPECT_THROW(r.select1(3), RankOutOfRange);
  EXPECT_TRUE(r.get_bit(3));
}

TEST(RRRBitVec, EmptyVector) {
  const RRRBitVec r{RawBitVector()};
  EXPECT_EQ(r.size(), 0u);
  EXPECT_THROW(r.rank1(0), IndexOutOfRange);
  EXPECT_THROW(r.select1(0), RankOutOfRange);
  EXPECT_THROW(r.space_report(), UndefinedReport);
  EXPECT_EQ(r.decompress(), RawBitVector());
}

TEST(RRRBitVec, ClassesAndOffsetsMatchBlockContents) {
  const auto v = generate({31, 0.4, 10'007});
  const RRRBitVec r(v);
  std::uint64_t stream = 0;
  for (std::size_t k = 0; k < r.num_blocks(); ++k) {
    const std::uint32_t x = block_bits(v, k);
    const auto code = rrr::encode_block(x);
    ASSERT_EQ(r.block_class(k), static_cast<unsigned>(std::popcount(x))) << k;
    ASSERT_EQ(r.block_offset(k), code.offset) << k;
    stream += rrr::kWidth[code.cls];
  }
  EXPECT_EQ(r.offset_stream_bits(), stream);
}

TEST(RRRBitVec, SuperblockDirectory) {
  const auto v = generate({32, 0.6, 5'000});
  const RRRBitVec r(v);
  const OracleBitVec o(v);
  std::uint64_t ptr = 0;
  for (std::size_t s = 0; s < r.superblocks().size(); ++s) {
    const auto sb = r.superblocks()[s];
    ASSERT_EQ(sb.cum_rank, s == 0 ? 0 : o.rank1(240 * s - 1));
    ASSERT_EQ(sb.bit_ptr, ptr);
    for (std::size_t k = 16 * s; k < std::min(16 * (s + 1), r.num_blocks()); ++k) ptr += rrr::kWidth[r.block_class(k)];
  }
}

TEST(RRRBitVec, SelectSamplesPointAtOwningSuperblock) {
  const auto v = generate({33, 0.5, 60'000});
  const RRRBitVec r(v);
  const OracleBitVec o(v);
  ASSERT_EQ(r.select1_samples().size(), (o.count_ones() + 255) / 256);
  for (std::size_t k = 0; k < r.select1_samples().size(); ++k) {
    ASSERT_EQ(r.select1_samples()[k], o.select1(256 * k) / 240);
  }
  for (std::size_t k = 0; k < r.select0_samples().size(); ++k) {
    ASSERT_EQ(r.select0_samples()[k], o.select0(256 * k) / 240);
  }
}

TEST(RRRBitVec, DecompressRoundTrip) {
  std::mt19937_64 rng(4);
  for (std::size_t len : {1u, 14u, 15u, 16u, 239u, 240u, 241u, 4097u, 65'521u}) {
    for (double d : {0.0, 0.01, 0.5, 0.99, 1.0}) {
      const auto v = generate({rng(), d, len});
      ASSERT_EQ(RRRBitVec(v).decompress(), v) << len << " " << d;
    }
  }
}

TEST(RRRBitVec, MatchesOracleAcrossDensities) {
  std::mt19937_64 rng(10);
  for (double d : {0.01, 0.1, 0.5, 0.9, 0.99}) {
    const auto v = generate({rng(), d, 100'003});
    const RRRBitVec r(v);
    const OracleBitVec o(v);
    for (std::size_t i = 0; i < v.size(); ++i) ASSERT_EQ(r.rank1(i), o.rank1(i)) << d << " " << i;
    for (std::uint64_t j = 0; j < o.count_ones(); j += 3) ASSERT_EQ(r.select1(j), o.select1(j)) << d << " " << j;
    for (std::uint64_t j = 0; j < o.count_zeros(); j += 3) ASSERT_EQ(r.select0(j), o.select0(j)) << d << " " << j;
  }
}

TEST(RRRBitVec, RankCursorMatchesRank) {
  const RRRBitVec r(generate({12, 0.3, 3'001}));
  for (std::size_t start : {0u, 7u, 15u, 239u, 240u, 3'000u}) {
    auto c = r.rank_cursor(start);
    for (std::size_t i = start; i < r.size(); ++i) {
      ASSERT_EQ(c.position(), i);
      ASSERT_EQ(c.next(), r.rank1(i)) << start << " " << i;
    }
    EXPECT_TRUE(c.done());
  }
  EXPECT_THROW(r.rank_cursor(r.size() + 1), IndexOutOfRange);
}

TEST(RRRBitVec, CustomTablesGiveSameAnswers) {
  const rrr::Tables t = rrr::build_tables();
  const auto v = generate({77, 0.2, 9'999});
  const RRRBitVec a(v, t);
  const RRRBitVec b(v);
  for (std::size_t i = 0; i < v.size(); i += 11) ASSERT_EQ(a.rank1(i), b.rank1(i));
}

TEST(RRRBitVec, CapacityLimit) {
  EXPECT_NO_THROW(RRRBitVec::check_capacity(1'000'000));
  EXPECT_THROW(RRRBitVec::check_capacity((std::uint64_t{1} << 32) * 240), CapacityError);
}

TEST(RRRBitVec, SpaceReport) {
  const std::size_t n = 1'000'000;
  const std::size_t blocks = (n + 14) / 15;
  const std::size_t supers = (blocks + 15) / 16;
  const double structural = (4.0 * blocks + 128.0 * supers) / n;
  EXPECT_NEAR(structural, 0.8002, 0.002);

  const double d[] = {0.01, 0.1, 0.5, 0.9, 0.99};
  const double table_offsets[] = {0.0393, 0.3349, 0.8328, 0.3349, 0.0393};
  const double table_samples[] = {0.0013, 0.0125, 0.0625, 0.1125, 0.1237};
  for (int k = 0; k < 5; ++k) {
    const auto r = RRRBitVec(generate({5 + static_cast<std::uint64_t>(k), d[k], n})).space_report();
    EXPECT_FALSE(r.raw.has_value());
    EXPECT_DOUBLE_EQ(*r.structural, structural);
    EXPECT_NEAR(*r.offsets, rrr::expected_offset_bits(d[k]) / 15.0, 0.01);
    EXPECT_NEAR(*r.offsets, table_offsets[k], 0.01);
    EXPECT_NEAR(*r.select1_samples, table_samples[k], 0.003);
    EXPECT_NEAR(*r.select1_samples, 32.0 * d[k] / 256.0, 0.003);
  }
}
