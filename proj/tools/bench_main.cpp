// Rank/select latency, construction time and space breakdown, as CSV.
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "succinct/bench.hpp"

int main(int argc, char** argv) {
  using namespace succinct::bench;
  CLI::App app{"Benchmark harness for BlockBitVec, FastBitVec and RRRBitVec"};
  std::string suite = "all";
  SuiteConfig cfg;
  std::string out_path;
  long warmup_ms = cfg.options.warmup.count();
  app.add_option("--suite", suite, "Suite to run")
      ->check(CLI::IsMember({"rank-size", "rank-density", "select", "select-density", "construct", "space", "all"}));
  app.add_option("--sizes", cfg.sizes, "Vector lengths (comma separated)")->delimiter(',')->check(CLI::PositiveNumber);
  app.add_option("--densities", cfg.densities, "Densities in [0,1] (comma separated)")
      ->delimiter(',')
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--seed", cfg.seed, "Seed for vectors and query positions");
  app.add_option("--out", out_path, "CSV output path (default: stdout)");
  app.add_option("--warmup-ms", warmup_ms, "Warmup per measurement in milliseconds")->check(CLI::NonNegativeNumber);
  app.add_option("--reps", cfg.options.repetitions, "Timed repetitions (>= 5)")->check(CLI::Range(5, 1000000));
  app.add_option("--iterations", cfg.options.iterations, "Queries per repetition")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);
  cfg.options.warmup = std::chrono::milliseconds(warmup_ms);

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "bench: cannot write " << out_path << '\n';
      return 2;
    }
  }
  std::ostream& out = out_path.empty() ? std::cout : file;
  write_csv_header(out);

  bool checksums_ok = true;
  try {
    run_suite(suite, cfg, [&](const BenchRecord& r) {
      write_csv_row(out, r);
      out.flush();
      if (!r.checksum_ok) {
        checksums_ok = false;
        std::cerr << "bench: checksum mismatch for " << r.structure << ' ' << r.op << " n=" << r.n << '\n';
      }
      if (r.mean_ns) {
        std::cerr << r.structure << ' ' << r.op << ' ' << r.pattern << " n=" << r.n << " d=" << r.density << ": "
                  << *r.mean_ns << " ns\n";
      }
    });
  } catch (const std::invalid_argument& e) {
    std::cerr << "bench: " << e.what() << '\n';
    return 2;
  }
  return checksums_ok ? 0 : 1;
}
