// Oracle-checked correctness harness for BlockBitVec, FastBitVec and RRRBitVec.
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "succinct/fuzz.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Differential fuzzer: rank/select structures against a per-bit oracle"};
  std::string suite = "all";
  std::uint64_t seed = 1;
  double scale = 1.0;
  std::string json_path;
  app.add_option("--suite", suite, "Suite to run")
      ->check(CLI::IsMember({"all", "exhaustive", "boundary", "sizes", "walk"}));
  app.add_option("--seed", seed, "Base seed for generated vectors and queries");
  app.add_option("--scale", scale, "Budget multiplier for the boundary and sizes suites")
      ->check(CLI::PositiveNumber);
  app.add_option("--json", json_path, "Write the full report as JSON to this path");
  CLI11_PARSE(app, argc, argv);

  using namespace succinct::fuzz;
  const auto start = std::chrono::steady_clock::now();
  std::vector<FuzzReport> reports;
  try {
    reports = run_suite(suite, seed, scale);
  } catch (const std::exception& e) {
    std::cerr << "fuzz: " << e.what() << '\n';
    return 2;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::uint64_t assertions = 0, failures = 0;
  for (const FuzzReport& r : reports) {
    std::cout << r.suite << ": vectors=" << r.vectors << " assertions=" << r.assertions
              << " failures=" << r.failure_count << '\n';
    for (const Failure& f : r.failures) {
      std::cout << "  FAIL " << f.structure << ' ' << f.query << '(' << f.argument << ") expected " << f.expected
                << " got " << f.got << " [" << f.origin.describe() << "]\n";
    }
    assertions += r.assertions;
    failures += r.failure_count;
  }
  std::cout << "total: assertions=" << assertions << " failures=" << failures << " time=" << seconds << "s\n";

  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "fuzz: cannot write " << json_path << '\n';
      return 2;
    }
    out << reports_to_json(reports) << '\n';
  }
  return failures == 0 ? 0 : 1;
}
