#include <gtest/gtest.h>

#include <sstream>

#include "succinct/bench.hpp"

using namespace succinct::bench;

namespace {

BenchOptions quick() { return BenchOptions{std::chrono::milliseconds(1), 5, 2'000}; }

std::string to_csv(const std::vector<BenchRecord>& rows) {
  std::ostringstream os;
  write_csv_header(os);
  for (const auto& r : rows) write_csv_row(os, r);
  return os.str();
}

}  // namespace

TEST(Bench, LatencyRecordAndChecksum) {
  for (Structure s : kAllStructures) {
    for (Operation op : {Operation::Rank1, Operation::Select1, Operation::Select0}) {
      const auto r = run_latency(s, op, 20'000, 0.5, Pattern::Uniform, 3, quick());
      EXPECT_TRUE(r.checksum_ok) << r.structure << " " << r.op;
      ASSERT_TRUE(r.mean_ns.has_value());
      EXPECT_GT(*r.mean_ns, 0.0);
      EXPECT_EQ(r.reps, 5u);
      EXPECT_EQ(r.structure, name(s));
      EXPECT_EQ(r.op, name(op));
    }
    for (Pattern p : {Pattern::Sequential, Pattern::Iterator}) {
      EXPECT_TRUE(run_latency(s, Operation::Rank1, 20'000, 0.1, p, 3, quick()).checksum_ok);
    }
  }
}

TEST(Bench, RejectsInvalidConfigurations) {
  EXPECT_THROW(run_latency(Structure::Block, Operation::Rank1, 0, 0.5, Pattern::Uniform, 1, quick()),
               std::invalid_argument);
  EXPECT_THROW(run_latency(Structure::Fast, Operation::Select1, 1000, 0.0, Pattern::Uniform, 1, quick()),
               std::invalid_argument);
  EXPECT_THROW(run_latency(Structure::Fast, Operation::Select0, 1000, 1.0, Pattern::Uniform, 1, quick()),
               std::invalid_argument);
  EXPECT_THROW(run_latency(Structure::RRR, Operation::Select1, 1000, 0.5, Pattern::Iterator, 1, quick()),
               std::invalid_argument);
  EXPECT_THROW(run_latency(Structure::RRR, Operation::Build, 1000, 0.5, Pattern::Uniform, 1, quick()),
               std::invalid_argument);
  EXPECT_THROW(run_latency(Structure::RRR, Operation::Rank1, 1000, 1.5, Pattern::Uniform, 1, quick()),
               std::invalid_argument);
  auto few = quick();
  few.repetitions = 4;
  EXPECT_THROW(run_latency(Structure::Block, Operation::Rank1, 1000, 0.5, Pattern::Uniform, 1, few),
               std::invalid_argument);
  EXPECT_THROW(run_suite("nope", SuiteConfig{}), std::invalid_argument);
}

TEST(Bench, ConstructionAndSpaceRows) {
  const auto c = run_construction(Structure::RRR, 50'000, 0.5, 1, quick());
  EXPECT_EQ(c.op, "build");
  EXPECT_TRUE(c.pattern.empty());
  ASSERT_TRUE(c.mean_ns.has_value());

  const auto rows = run_space_sweep(100'000, {0.1, 0.5}, 1);
  ASSERT_EQ(rows.size(), 6u);
  for (const auto& r : rows) {
    EXPECT_EQ(r.op, "space");
    EXPECT_FALSE(r.mean_ns.has_value());
    EXPECT_GT(r.space.total(), 0.0);
  }
}

TEST(Bench, CsvRoundTripsThroughValidator) {
  std::vector<BenchRecord> rows = run_space_sweep(10'000, {0.5}, 1);
  rows.push_back(run_latency(Structure::Block, Operation::Rank1, 10'000, 0.5, Pattern::Uniform, 1, quick()));
  rows.push_back(run_construction(Structure::Fast, 10'000, 0.5, 1, quick()));
  const std::string csv = to_csv(rows);
  std::istringstream in(csv);
  EXPECT_TRUE(validate_csv(in).empty()) << csv;

  std::istringstream header_line(csv.substr(0, csv.find('\n')));
  std::string first;
  std::getline(header_line, first);
  EXPECT_EQ(first, kCsvHeader);
}

TEST(Bench, SpaceRowColumns) {
  const auto rows = run_space_sweep(100'000, {0.5}, 2);
  std::istringstream in(to_csv(rows));
  std::string line;
  std::getline(in, line);
  std::getline(in, line);  // BlockBitVec
  EXPECT_EQ(line.rfind("BlockBitVec,space,100000,", 0), 0u) << line;
}

TEST(Bench, ValidatorFlagsProblems) {
  {
    std::istringstream in("");
    EXPECT_FALSE(validate_csv(in).empty());
  }
  {
    std::istringstream in(std::string(kCsvHeader) + "\n");
    EXPECT_FALSE(validate_csv(in).empty());
  }
  {
    std::istringstream in(std::string(kCsvHeader) + "\nBlockBitVec,rank1,1000,0.5,uniform,,,5,1,0.06,0,,,1.06\n");
    EXPECT_FALSE(validate_csv(in).empty());
  }
  {
    std::istringstream in(std::string(kCsvHeader) + "\nBlockBitVec,rank1,1000,0.5,uniform,10.0,1.0,3,1,0.06,0,,,1.06\n");
    EXPECT_FALSE(validate_csv(in).empty());
  }
  {
    std::istringstream in(std::string(kCsvHeader) + "\nSomething,space,1000,0.5,,,,,1,0.06,0,,,1.06\n");
    EXPECT_FALSE(validate_csv(in).empty());
  }
  {
    std::istringstream in(std::string(kCsvHeader) + "\nBlockBitVec,space,1000,0.5,,,,,1,0.06,0,,,1.06\n");
    EXPECT_TRUE(validate_csv(in).empty());
  }
}
