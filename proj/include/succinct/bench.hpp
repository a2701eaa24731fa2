#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "succinct/space.hpp"

namespace succinct::bench {

enum class Structure { Block, Fast, RRR };
enum class Operation { Rank1, Select1, Select0, Build };
enum class Pattern { Uniform, Sequential, Iterator };

inline constexpr Structure kAllStructures[] = {Structure::Block, Structure::Fast, Structure::RRR};

std::string_view name(Structure s);
std::string_view name(Operation op);
std::string_view name(Pattern p);

struct BenchOptions {
  std::chrono::milliseconds warmup{500};
  std::size_t repetitions = 5;
  std::size_t iterations = 100'000;  // queries per repetition
};

struct BenchRecord {
  std::string structure;
  std::string op;  // rank1 | select1 | select0 | build | space
  std::size_t n = 0;
  double density = 0.0;
  std::string pattern;  // empty for build and space rows
  std::optional<double> mean_ns;
  std::optional<double> stddev_ns;
  std::size_t reps = 0;
  SpaceReport space;
  std::uint64_t checksum = 0;
  bool checksum_ok = true;
};

/// Mean per-query latency over `repetitions` timed loops, after a warmup of
/// at least options.warmup. Query arguments are drawn before timing starts.
/// Every timed loop's answer sum must equal an untimed per-query rerun.
/// Throws std::invalid_argument for n == 0, an empty select domain, an
/// iterator pattern on select, op == Build, density outside [0, 1] or fewer
/// than 5 repetitions.
BenchRecord run_latency(Structure s, Operation op, std::size_t n, double density, Pattern pattern,
                        std::uint64_t seed, const BenchOptions& options = {});

/// Build time only (generation excluded); mean_ns is nanoseconds per build.
BenchRecord run_construction(Structure s, std::size_t n, double density, std::uint64_t seed,
                             const BenchOptions& options = {});

/// One space row per structure and density; no timing.
std::vector<BenchRecord> run_space_sweep(std::size_t n, const std::vector<double>& densities, std::uint64_t seed);

struct SuiteConfig {
  std::vector<std::size_t> sizes{100'000, 1'000'000};
  std::vector<double> densities{0.01, 0.10, 0.50, 0.90, 0.99};
  std::uint64_t seed = 42;
  BenchOptions options;
};

inline constexpr std::string_view kSuites[] = {"rank-size", "rank-density", "select", "select-density",
                                               "construct", "space"};

/// Runs one named suite or "all". `on_record` sees each record as it lands.
/// Throws std::invalid_argument for unknown suite names.
std::vector<BenchRecord> run_suite(std::string_view suite, const SuiteConfig& cfg,
                                   const std::function<void(const BenchRecord&)>& on_record = {});

inline constexpr std::string_view kCsvHeader =
    "structure,op,n,density,pattern,mean_ns,stddev_ns,reps,raw_bpe,rank_index_bpe,select_index_bpe,"
    "offsets_bpe,structural_bpe,total_bpe";

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const BenchRecord& r);

/// Schema problems found in a CSV stream; empty means valid.
std::vector<std::string> validate_csv(std::istream& in);

}  // namespace succinct::bench
