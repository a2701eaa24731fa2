#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "succinct/bits.hpp"

namespace succinct::fuzz {

/// How a test vector was produced; enough to rebuild it exactly.
struct VectorOrigin {
  enum class Kind { Generated, Pattern, SingleBit };
  Kind kind = Kind::Generated;
  GeneratorSpec spec;         // Generated: seed, density, len_bits; others: len_bits only
  std::uint64_t pattern = 0;  // Pattern: the raw bits; SingleBit: the set position

  std::string describe() const;
};

RawBitVector materialize(const VectorOrigin& origin);

struct Failure {
  std::string suite;
  VectorOrigin origin;
  std::string structure;
  std::string query;  // rank1 | rank0 | select1 | select0
  std::uint64_t argument = 0;
  std::string expected;
  std::string got;
};

struct FuzzReport {
  static constexpr std::size_t kMaxStoredFailures = 64;

  std::string suite;
  std::uint64_t vectors = 0;
  std::uint64_t assertions = 0;
  std::uint64_t failure_count = 0;
  std::vector<Failure> failures;  // first kMaxStoredFailures only

  bool ok() const { return failure_count == 0; }
  void record(Failure f);
  void merge(const FuzzReport& other);
};

/// Query interface the harness drives. Implementations wrap one structure.
class Subject {
 public:
  virtual ~Subject() = default;
  virtual std::string name() const = 0;
  virtual std::uint64_t rank1(std::size_t i) const = 0;
  virtual std::uint64_t rank0(std::size_t i) const = 0;
  virtual std::size_t select1(std::uint64_t j) const = 0;
  virtual std::size_t select0(std::uint64_t j) const = 0;
};

using SubjectFactory = std::function<std::unique_ptr<Subject>(const RawBitVector&)>;

/// BlockBitVec, FastBitVec and RRRBitVec.
std::vector<SubjectFactory> default_subjects();

/// Which queries to check on one vector; the all_* flags override the lists.
struct QueryPlan {
  bool all_positions = false;
  bool all_ranks = false;
  std::vector<std::size_t> positions;
  std::vector<std::uint64_t> select1_ranks;
  std::vector<std::uint64_t> select0_ranks;
};

/// Builds every subject over the vector and compares each planned query with
/// the oracle. Also asserts the out-of-range contracts at i = N and at
/// j = ones / zeros.
void check_vector(const RawBitVector& v, const VectorOrigin& origin, const QueryPlan& plan,
                  const std::vector<SubjectFactory>& subjects, FuzzReport& report);

struct ExhaustiveConfig {
  std::vector<std::size_t> lengths{15, 16};
};

struct BoundaryConfig {
  std::size_t max_bits = 250'000;
  std::vector<double> densities{0.01, 0.05, 0.10, 0.25, 0.50, 0.75, 0.90, 0.95, 0.99};
  std::size_t vectors_per_cell = 2;
  std::size_t random_queries = 20'000;
  std::uint64_t seed = 1;
};

struct SizesConfig {
  std::vector<std::size_t> sizes;  // defaults to special_sizes()
  std::vector<double> densities{0.0, 1.0, 0.0001, 0.9999, 0.5};
  std::size_t vectors_per_cell = 2;
  std::uint64_t seed = 1;
};

struct WalkConfig {
  std::vector<std::size_t> sizes{15, 16, 17, 239, 240, 241, 4095, 4096, 4097};
};

/// Block-boundary lengths plus primes straddling word and block sizes.
std::vector<std::size_t> special_sizes();

FuzzReport exhaustive_scan(const ExhaustiveConfig& cfg, const std::vector<SubjectFactory>& subjects = default_subjects());
FuzzReport boundary_fuzz(const BoundaryConfig& cfg, const std::vector<SubjectFactory>& subjects = default_subjects());
FuzzReport special_sizes_fuzz(const SizesConfig& cfg, const std::vector<SubjectFactory>& subjects = default_subjects());
FuzzReport single_bit_walk(const WalkConfig& cfg, const std::vector<SubjectFactory>& subjects = default_subjects());

/// Suite budgets scaled from the defaults; scale 1 is the standard run.
BoundaryConfig boundary_config(double scale, std::uint64_t seed);
SizesConfig sizes_config(double scale, std::uint64_t seed);

/// Runs the named suite ("all", "exhaustive", "boundary", "sizes", "walk").
/// Throws std::invalid_argument for unknown names or non-positive scale.
std::vector<FuzzReport> run_suite(const std::string& suite, std::uint64_t seed, double scale);

/// JSON document: {"suites": [FuzzReport...], "total_assertions", "total_failures"}.
std::string reports_to_json(const std::vector<FuzzReport>& reports);

}  // namespace succinct::fuzz
