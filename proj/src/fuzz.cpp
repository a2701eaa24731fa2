#include "succinct/fuzz.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <random>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "succinct/block_bitvec.hpp"
#include "succinct/fast_bitvec.hpp"
#include "succinct/oracle.hpp"
#include "succinct/rrr_bitvec.hpp"

namespace succinct::fuzz {

namespace {

template <typename Structure>
class StructureSubject final : public Subject {
 public:
  StructureSubject(std::string name, Structure s) : name_(std::move(name)), s_(std::move(s)) {}
  std::string name() const override { return name_; }
  std::uint64_t rank1(std::size_t i) const override { return s_.rank1(i); }
  std::uint64_t rank0(std::size_t i) const override { return s_.rank0(i); }
  std::size_t select1(std::uint64_t j) const override { return s_.select1(j); }
  std::size_t select0(std::uint64_t j) const override { return s_.select0(j); }

 private:
  std::string name_;
  Structure s_;
};

const char* kind_name(VectorOrigin::Kind k) {
  switch (k) {
    case VectorOrigin::Kind::Generated:
      return "generated";
    case VectorOrigin::Kind::Pattern:
      return "pattern";
    case VectorOrigin::Kind::SingleBit:
      return "single-bit";
  }
  return "unknown";
}

class Checker {
 public:
  Checker(FuzzReport& report, const VectorOrigin& origin, const Subject& subject)
      : report_(report), origin_(origin), subject_(subject) {}

  template <typename Call>
  void expect_value(const char* query, std::uint64_t arg, std::uint64_t expected, Call&& call) {
    ++report_.assertions;
    try {
      const std::uint64_t got = call();
      if (got != expected) fail(query, arg, std::to_string(expected), std::to_string(got));
    } catch (const std::exception& e) {
      fail(query, arg, std::to_string(expected), std::string("threw: ") + e.what());
    }
  }

  template <typename Error, typename Call>
  void expect_throw(const char* query, std::uint64_t arg, Call&& call) {
    ++report_.assertions;
    try {
      const std::uint64_t got = call();
      fail(query, arg, "out-of-range error", std::to_string(got));
    } catch (const Error&) {
    } catch (const std::exception& e) {
      fail(query, arg, "out-of-range error", std::string("wrong exception: ") + e.what());
    }
  }

 private:
  void fail(const char* query, std::uint64_t arg, std::string expected, std::string got) {
    report_.record(Failure{report_.suite, origin_, subject_.name(), query, arg, std::move(expected), std::move(got)});
  }

  FuzzReport& report_;
  const VectorOrigin& origin_;
  const Subject& subject_;
};

void add_boundaries(std::vector<std::uint64_t>& out, std::uint64_t limit, std::initializer_list<std::uint64_t> grid) {
  for (std::uint64_t g : grid) {
    for (std::uint64_t m = 0; m * g <= limit + 2; ++m) {
      for (int d = -2; d <= 2; ++d) {
        const auto p = static_cast<std::int64_t>(m * g) + d;
        if (p >= 0 && static_cast<std::uint64_t>(p) < limit) out.push_back(static_cast<std::uint64_t>(p));
      }
    }
  }
}

void add_random(std::vector<std::uint64_t>& out, std::uint64_t limit, std::size_t count, std::mt19937_64& rng) {
  if (limit == 0) return;
  std::uniform_int_distribution<std::uint64_t> dist(0, limit - 1);
  for (std::size_t q = 0; q < count; ++q) out.push_back(dist(rng));
}

void sort_unique(std::vector<std::uint64_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::string VectorOrigin::describe() const {
  std::ostringstream os;
  os << kind_name(kind) << " len=" << spec.len_bits;
  switch (kind) {
    case Kind::Generated:
      os << " seed=" << spec.seed << " density=" << spec.density;
      break;
    case Kind::Pattern:
      os << " pattern=" << pattern;
      break;
    case Kind::SingleBit:
      os << " position=" << pattern;
      break;
  }
  return os.str();
}

RawBitVector materialize(const VectorOrigin& origin) {
  switch (origin.kind) {
    case VectorOrigin::Kind::Generated:
      return generate(origin.spec);
    case VectorOrigin::Kind::Pattern:
      if (origin.spec.len_bits > kWordBits) throw std::invalid_argument("materialize: pattern longer than 64 bits");
      return RawBitVector::from_words({origin.pattern}, origin.spec.len_bits);
    case VectorOrigin::Kind::SingleBit: {
      RawBitVector v(origin.spec.len_bits);
      v.set_bit(origin.pattern, true);
      return v;
    }
  }
  throw std::invalid_argument("materialize: unknown origin kind");
}

void FuzzReport::record(Failure f) {
  ++failure_count;
  if (failures.size() < kMaxStoredFailures) failures.push_back(std::move(f));
}

void FuzzReport::merge(const FuzzReport& other) {
  vectors += other.vectors;
  assertions += other.assertions;
  failure_count += other.failure_count;
  for (const Failure& f : other.failures) {
    if (failures.size() >= kMaxStoredFailures) break;
    failures.push_back(f);
  }
}

std::vector<SubjectFactory> default_subjects() {
  return {
      [](const RawBitVector& v) -> std::unique_ptr<Subject> {
        return std::make_unique<StructureSubject<BlockBitVec>>("BlockBitVec", BlockBitVec(v));
      },
      [](const RawBitVector& v) -> std::unique_ptr<Subject> {
        return std::make_unique<StructureSubject<FastBitVec>>("FastBitVec", FastBitVec(v));
      },
      [](const RawBitVector& v) -> std::unique_ptr<Subject> {
        return std::make_unique<StructureSubject<RRRBitVec>>("RRRBitVec", RRRBitVec(v));
      },
  };
}

void check_vector(const RawBitVector& v, const VectorOrigin& origin, const QueryPlan& plan,
                  const std::vector<SubjectFactory>& subjects, FuzzReport& report) {
  ++report.vectors;
  const OracleBitVec oracle(v);
  const std::size_t n = v.size();
  const std::uint64_t ones = oracle.count_ones();
  const std::uint64_t zeros = oracle.count_zeros();

  for (const SubjectFactory& make : subjects) {
    std::unique_ptr<Subject> subject;
    try {
      subject = make(v);
    } catch (const std::exception& e) {
      ++report.assertions;
      report.record(Failure{report.suite, origin, "factory", "build", n, "constructed", std::string("threw: ") + e.what()});
      continue;
    }
    const Subject& s = *subject;
    Checker check(report, origin, s);

    auto check_position = [&](std::size_t i) {
      check.expect_value("rank1", i, oracle.rank1(i), [&] { return s.rank1(i); });
      check.expect_value("rank0", i, oracle.rank0(i), [&] { return s.rank0(i); });
    };
    auto check_select1 = [&](std::uint64_t j) {
      check.expect_value("select1", j, oracle.select1(j), [&] { return s.select1(j); });
    };
    auto check_select0 = [&](std::uint64_t j) {
      check.expect_value("select0", j, oracle.select0(j), [&] { return s.select0(j); });
    };

    if (plan.all_positions) {
      for (std::size_t i = 0; i < n; ++i) check_position(i);
    } else {
      for (std::size_t i : plan.positions) {
        if (i < n) check_position(i);
      }
    }
    if (plan.all_ranks) {
      for (std::uint64_t j = 0; j < ones; ++j) check_select1(j);
      for (std::uint64_t j = 0; j < zeros; ++j) check_select0(j);
    } else {
      for (std::uint64_t j : plan.select1_ranks) {
        if (j < ones) check_select1(j);
      }
      for (std::uint64_t j : plan.select0_ranks) {
        if (j < zeros) check_select0(j);
      }
    }

    check.expect_throw<IndexOutOfRange>("rank1", n, [&] { return s.rank1(n); });
    check.expect_throw<RankOutOfRange>("select1", ones, [&] { return s.select1(ones); });
    check.expect_throw<RankOutOfRange>("select0", zeros, [&] { return s.select0(zeros); });
  }
}

std::vector<std::size_t> special_sizes() {
  return {1,   2,    3,    5,    7,    13,   15,   16,   17,   31,   61,    67,    127,   239,  240,
          241, 251,  257,  509,  521,  1021, 2039, 2053, 4093, 4095, 4096,  4097,  4099,  8191, 8209,
          16381, 65521};
}

FuzzReport exhaustive_scan(const ExhaustiveConfig& cfg, const std::vector<SubjectFactory>& subjects) {
  FuzzReport report;
  report.suite = "exhaustive";
  QueryPlan plan;
  plan.all_positions = true;
  plan.all_ranks = true;
  for (std::size_t len : cfg.lengths) {
    if (len == 0 || len > 24) throw std::invalid_argument("exhaustive_scan: lengths must lie in [1, 24]");
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << len); ++x) {
      VectorOrigin origin{VectorOrigin::Kind::Pattern, GeneratorSpec{0, 0.0, len}, x};
      check_vector(RawBitVector::from_words({x}, len), origin, plan, subjects, report);
    }
  }
  return report;
}

FuzzReport boundary_fuzz(const BoundaryConfig& cfg, const std::vector<SubjectFactory>& subjects) {
  FuzzReport report;
  report.suite = "boundary";
  std::mt19937_64 master(cfg.seed);
  std::uniform_int_distribution<std::size_t> length_dist(1, std::max<std::size_t>(cfg.max_bits, 1));
  for (double density : cfg.densities) {
    for (std::size_t k = 0; k < cfg.vectors_per_cell; ++k) {
      const std::size_t len = k == 0 ? cfg.max_bits : length_dist(master);
      const GeneratorSpec spec{master(), density, len};
      const RawBitVector v = generate(spec);
      const std::uint64_t ones = v.count_ones();

      std::mt19937_64 query_rng(spec.seed ^ 0x9E3779B97F4A7C15ULL);
      std::vector<std::uint64_t> positions;
      positions.push_back(0);
      if (len > 0) positions.push_back(len - 1);
      add_boundaries(positions, len, {15, 240, 256, 512, 2048, 4096});
      add_random(positions, len, cfg.random_queries, query_rng);
      sort_unique(positions);

      std::vector<std::uint64_t> ranks1, ranks0;
      add_boundaries(ranks1, ones, {15, 240, 256, 512, 2048, 4096});
      add_random(ranks1, ones, cfg.random_queries, query_rng);
      add_boundaries(ranks0, len - ones, {15, 240, 256, 512, 2048, 4096});
      add_random(ranks0, len - ones, cfg.random_queries, query_rng);
      sort_unique(ranks1);
      sort_unique(ranks0);

      QueryPlan plan;
      plan.positions.assign(positions.begin(), positions.end());
      plan.select1_ranks = std::move(ranks1);
      plan.select0_ranks = std::move(ranks0);
      check_vector(v, VectorOrigin{VectorOrigin::Kind::Generated, spec, 0}, plan, subjects, report);
    }
  }
  return report;
}

FuzzReport special_sizes_fuzz(const SizesConfig& cfg, const std::vector<SubjectFactory>& subjects) {
  FuzzReport report;
  report.suite = "sizes";
  const std::vector<std::size_t> sizes = cfg.sizes.empty() ? special_sizes() : cfg.sizes;
  std::mt19937_64 master(cfg.seed);
  QueryPlan plan;
  plan.all_positions = true;
  plan.all_ranks = true;
  for (std::size_t len : sizes) {
    for (double density : cfg.densities) {
      for (std::size_t k = 0; k < cfg.vectors_per_cell; ++k) {
        const GeneratorSpec spec{master(), density, len};
        check_vector(generate(spec), VectorOrigin{VectorOrigin::Kind::Generated, spec, 0}, plan, subjects, report);
      }
    }
  }
  return report;
}

FuzzReport single_bit_walk(const WalkConfig& cfg, const std::vector<SubjectFactory>& subjects) {
  FuzzReport report;
  report.suite = "walk";
  for (std::size_t len : cfg.sizes) {
    for (std::size_t p = 0; p < len; ++p) {
      const VectorOrigin origin{VectorOrigin::Kind::SingleBit, GeneratorSpec{0, 0.0, len}, p};
      QueryPlan plan;
      plan.positions = {p, len - 1};
      if (p > 0) plan.positions.push_back(p - 1);
      plan.select1_ranks = {0};
      if (p > 0) plan.select0_ranks.push_back(p - 1);
      plan.select0_ranks.push_back(p);  // dropped by check_vector when p == len - 1
      check_vector(materialize(origin), origin, plan, subjects, report);
    }
  }
  return report;
}

BoundaryConfig boundary_config(double scale, std::uint64_t seed) {
  BoundaryConfig cfg;
  cfg.seed = seed;
  cfg.vectors_per_cell = static_cast<std::size_t>(std::max(1.0, std::round(2.0 * scale)));
  cfg.random_queries = static_cast<std::size_t>(std::max(1000.0, std::round(20'000.0 * scale)));
  return cfg;
}

SizesConfig sizes_config(double scale, std::uint64_t seed) {
  SizesConfig cfg;
  cfg.seed = seed;
  cfg.vectors_per_cell = static_cast<std::size_t>(std::max(1.0, std::round(2.0 * scale)));
  return cfg;
}

std::vector<FuzzReport> run_suite(const std::string& suite, std::uint64_t seed, double scale) {
  if (!(scale > 0.0)) throw std::invalid_argument("run_suite: scale must be positive");
  const bool all = suite == "all";
  if (!all && suite != "exhaustive" && suite != "boundary" && suite != "sizes" && suite != "walk") {
    throw std::invalid_argument("run_suite: unknown suite '" + suite + "'");
  }
  std::vector<FuzzReport> reports;
  if (all || suite == "exhaustive") reports.push_back(exhaustive_scan(ExhaustiveConfig{}));
  if (all || suite == "boundary") reports.push_back(boundary_fuzz(boundary_config(scale, seed)));
  if (all || suite == "sizes") reports.push_back(special_sizes_fuzz(sizes_config(scale, seed)));
  if (all || suite == "walk") reports.push_back(single_bit_walk(WalkConfig{}));
  return reports;
}

std::string reports_to_json(const std::vector<FuzzReport>& reports) {
  nlohmann::json doc;
  doc["suites"] = nlohmann::json::array();
  std::uint64_t total_assertions = 0, total_failures = 0;
  for (const FuzzReport& r : reports) {
    nlohmann::json failures = nlohmann::json::array();
    for (const Failure& f : r.failures) {
      failures.push_back({{"suite", f.suite},
                          {"origin",
                           {{"kind", kind_name(f.origin.kind)},
                            {"seed", f.origin.spec.seed},
                            {"density", f.origin.spec.density},
                            {"len_bits", f.origin.spec.len_bits},
                            {"pattern", f.origin.pattern}}},
                          {"structure", f.structure},
                          {"query", f.query},
                          {"argument", f.argument},
                          {"expected", f.expected},
                          {"got", f.got}});
    }
    doc["suites"].push_back({{"suite", r.suite},
                             {"vectors", r.vectors},
                             {"assertions", r.assertions},
                             {"failure_count", r.failure_count},
                             {"failures", std::move(failures)}});
    total_assertions += r.assertions;
    total_failures += r.failure_count;
  }
  doc["total_assertions"] = total_assertions;
  doc["total_failures"] = total_failures;
  return doc.dump(2);
}

}  // namespace succinct::fuzz
