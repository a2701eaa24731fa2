#include "succinct/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "succinct/bits.hpp"
#include "succinct/block_bitvec.hpp"
#include "succinct/fast_bitvec.hpp"
#include "succinct/rrr_bitvec.hpp"

namespace succinct::bench {

namespace {

using Clock = std::chrono::steady_clock;

inline void keep(std::uint64_t value) {
#if defined(__GNUC__) || defined(__clang__)
  asm volatile("" : : "r"(value) : "memory");
#else
  static volatile std::uint64_t sink;
  sink = value;
#endif
}

double mean_of(const std::vector<double>& xs) { return std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size(); }

double stddev_of(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  const double m = mean_of(xs);
  double acc = 0.0;
  for (double x : xs) acc += (x - m) * (x - m);
  return std::sqrt(acc / (xs.size() - 1));
}

void check_common(std::size_t n, double density, const BenchOptions& options) {
  if (n == 0) throw std::invalid_argument("bench: vector length must be positive");
  if (!(density >= 0.0 && density <= 1.0)) throw std::invalid_argument("bench: density must lie in [0, 1]");
  if (options.repetitions < 5) throw std::invalid_argument("bench: at least 5 repetitions are required");
  if (options.iterations == 0) throw std::invalid_argument("bench: iterations must be positive");
}

struct Timing {
  std::vector<double> per_query_ns;
  std::vector<std::uint64_t> sums;
};

// Warm up for at least `warmup`, then time `repetitions` runs of `loop`.
template <typename Loop>
Timing time_loop(Loop&& loop, const BenchOptions& options, double work_per_run) {
  const auto warm_start = Clock::now();
  do {
    keep(loop());
  } while (Clock::now() - warm_start < options.warmup);

  Timing t;
  for (std::size_t rep = 0; rep < options.repetitions; ++rep) {
    const auto start = Clock::now();
    const std::uint64_t sum = loop();
    const auto stop = Clock::now();
    keep(sum);
    t.sums.push_back(sum);
    t.per_query_ns.push_back(std::chrono::duration<double, std::nano>(stop - start).count() / work_per_run);
  }
  return t;
}

template <typename S>
S build(const RawBitVector& v) {
  if constexpr (std::is_same_v<S, RRRBitVec>) {
    return S(v);
  } else {
    return S(RawBitVector(v));
  }
}

template <typename S>
BenchRecord latency_for(const RawBitVector& v, Operation op, Pattern pattern, std::uint64_t seed,
                        const BenchOptions& options) {
  const S s = build<S>(v);
  const std::uint64_t domain =
      op == Operation::Rank1 ? s.size() : (op == Operation::Select1 ? s.count_ones() : s.count_zeros());
  if (domain == 0) throw std::invalid_argument("bench: empty query domain for this operation");

  // Query arguments, generated outside every timed region.
  std::vector<std::uint64_t> queries(options.iterations);
  if (pattern == Pattern::Uniform) {
    std::mt19937_64 rng(seed ^ 0xD1B54A32D192ED03ULL);
    std::uniform_int_distribution<std::uint64_t> dist(0, domain - 1);
    for (auto& q : queries) q = dist(rng);
  } else {
    for (std::size_t k = 0; k < queries.size(); ++k) queries[k] = k % domain;
  }

  auto answer = [&](std::uint64_t q) -> std::uint64_t {
    switch (op) {
      case Operation::Rank1:
        return s.rank1(q);
      case Operation::Select1:
        return s.select1(q);
      default:
        return s.select0(q);
    }
  };

  Timing t;
  const double work = static_cast<double>(options.iterations);
  if (pattern == Pattern::Iterator) {
    t = time_loop(
        [&] {
          std::uint64_t sum = 0;
          auto cursor = s.rank_cursor(0);
          for (std::size_t k = 0; k < options.iterations; ++k) {
            if (cursor.done()) cursor = s.rank_cursor(0);
            sum += cursor.next();
          }
          return sum;
        },
        options, work);
  } else if (op == Operation::Rank1) {
    t = time_loop(
        [&] {
          std::uint64_t sum = 0;
          for (std::uint64_t q : queries) sum += s.rank1(q);
          return sum;
        },
        options, work);
  } else if (op == Operation::Select1) {
    t = time_loop(
        [&] {
          std::uint64_t sum = 0;
          for (std::uint64_t q : queries) sum += s.select1(q);
          return sum;
        },
        options, work);
  } else {
    t = time_loop(
        [&] {
          std::uint64_t sum = 0;
          for (std::uint64_t q : queries) sum += s.select0(q);
          return sum;
        },
        options, work);
  }

  // Untimed rerun, one plain query call per argument.
  std::uint64_t expected = 0;
  for (std::uint64_t q : queries) expected += answer(q);

  BenchRecord r;
  r.op = std::string(name(op));
  r.pattern = std::string(name(pattern));
  r.n = s.size();
  r.mean_ns = mean_of(t.per_query_ns);
  r.stddev_ns = stddev_of(t.per_query_ns);
  r.reps = options.repetitions;
  r.space = s.space_report();
  r.checksum = expected;
  r.checksum_ok = std::all_of(t.sums.begin(), t.sums.end(), [&](std::uint64_t x) { return x == expected; });
  return r;
}

template <typename S>
BenchRecord construction_for(const RawBitVector& v, const BenchOptions& options) {
  keep(build<S>(v).count_ones());

  std::vector<double> ns;
  std::uint64_t ones = 0;
  bool ok = true;
  for (std::size_t rep = 0; rep < options.repetitions; ++rep) {
    const auto start = Clock::now();
    const S s = build<S>(v);
    const auto stop = Clock::now();
    ones = s.count_ones();
    keep(ones);
    ok = ok && ones == v.count_ones();
    ns.push_back(std::chrono::duration<double, std::nano>(stop - start).count());
  }
  BenchRecord r;
  r.op = "build";
  r.n = v.size();
  r.mean_ns = mean_of(ns);
  r.stddev_ns = stddev_of(ns);
  r.reps = options.repetitions;
  r.space = build<S>(v).space_report();
  r.checksum = ones;
  r.checksum_ok = ok;
  return r;
}

template <typename F>
BenchRecord dispatch(Structure s, F&& f) {
  BenchRecord r;
  switch (s) {
    case Structure::Block:
      r = f.template operator()<BlockBitVec>();
      break;
    case Structure::Fast:
      r = f.template operator()<FastBitVec>();
      break;
    case Structure::RRR:
      r = f.template operator()<RRRBitVec>();
      break;
  }
  r.structure = std::string(name(s));
  return r;
}

std::string format_optional(const std::optional<double>& v, const char* fmt) {
  if (!v) return {};
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, *v);
  return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

bool parses_as_double(const std::string& s) {
  if (s.empty()) return false;
  std::istringstream is(s);
  double d;
  is >> d;
  return !is.fail() && is.eof() && std::isfinite(d);
}

bool parses_as_count(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

std::string_view name(Structure s) {
  switch (s) {
    case Structure::Block:
      return "BlockBitVec";
    case Structure::Fast:
      return "FastBitVec";
    case Structure::RRR:
      return "RRRBitVec";
  }
  return "?";
}

std::string_view name(Operation op) {
  switch (op) {
    case Operation::Rank1:
      return "rank1";
    case Operation::Select1:
      return "select1";
    case Operation::Select0:
      return "select0";
    case Operation::Build:
      return "build";
  }
  return "?";
}

std::string_view name(Pattern p) {
  switch (p) {
    case Pattern::Uniform:
      return "uniform";
    case Pattern::Sequential:
      return "sequential";
    case Pattern::Iterator:
      return "iterator";
  }
  return "?";
}

BenchRecord run_latency(Structure s, Operation op, std::size_t n, double density, Pattern pattern,
                        std::uint64_t seed, const BenchOptions& options) {
  check_common(n, density, options);
  if (op == Operation::Build) throw std::invalid_argument("bench: use run_construction for build timing");
  if (pattern == Pattern::Iterator && op != Operation::Rank1) {
    throw std::invalid_argument("bench: the iterator pattern applies to rank1 only");
  }
  const RawBitVector v = generate(GeneratorSpec{seed, density, n});
  BenchRecord r = dispatch(s, [&]<typename S>() { return latency_for<S>(v, op, pattern, seed, options); });
  r.density = density;
  return r;
}

BenchRecord run_construction(Structure s, std::size_t n, double density, std::uint64_t seed,
                             const BenchOptions& options) {
  check_common(n, density, options);
  const RawBitVector v = generate(GeneratorSpec{seed, density, n});
  BenchRecord r = dispatch(s, [&]<typename S>() { return construction_for<S>(v, options); });
  r.density = density;
  return r;
}

std::vector<BenchRecord> run_space_sweep(std::size_t n, const std::vector<double>& densities, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("bench: vector length must be positive");
  std::vector<BenchRecord> out;
  for (double d : densities) {
    if (!(d >= 0.0 && d <= 1.0)) throw std::invalid_argument("bench: density must lie in [0, 1]");
    const RawBitVector v = generate(GeneratorSpec{seed, d, n});
    for (Structure s : kAllStructures) {
      BenchRecord r = dispatch(s, [&]<typename S>() {
        BenchRecord rec;
        rec.space = build<S>(v).space_report();
        return rec;
      });
      r.op = "space";
      r.n = n;
      r.density = d;
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<BenchRecord> run_suite(std::string_view suite, const SuiteConfig& cfg,
                                   const std::function<void(const BenchRecord&)>& on_record) {
  const bool all = suite == "all";
  if (!all && std::find(std::begin(kSuites), std::end(kSuites), suite) == std::end(kSuites)) {
    throw std::invalid_argument("bench: unknown suite '" + std::string(suite) + "'");
  }
  if (cfg.sizes.empty()) throw std::invalid_argument("bench: no sizes given");
  const std::size_t largest = *std::max_element(cfg.sizes.begin(), cfg.sizes.end());

  std::vector<BenchRecord> out;
  auto emit = [&](BenchRecord r) {
    if (on_record) on_record(r);
    out.push_back(std::move(r));
  };
  auto wants = [&](std::string_view name) { return all || suite == name; };

  if (wants("rank-size")) {
    for (std::size_t n : cfg.sizes) {
      for (Structure s : kAllStructures) {
        for (Pattern p : {Pattern::Uniform, Pattern::Sequential, Pattern::Iterator}) {
          emit(run_latency(s, Operation::Rank1, n, 0.5, p, cfg.seed, cfg.options));
        }
      }
    }
  }
  if (wants("rank-density")) {
    for (double d : cfg.densities) {
      for (Structure s : kAllStructures) {
        emit(run_latency(s, Operation::Rank1, largest, d, Pattern::Uniform, cfg.seed, cfg.options));
      }
    }
  }
  if (wants("select")) {
    for (std::size_t n : cfg.sizes) {
      for (Structure s : kAllStructures) {
        for (Operation op : {Operation::Select1, Operation::Select0}) {
          emit(run_latency(s, op, n, 0.5, Pattern::Uniform, cfg.seed, cfg.options));
        }
      }
    }
  }
  if (wants("select-density")) {
    for (double d : cfg.densities) {
      for (Structure s : kAllStructures) {
        emit(run_latency(s, Operation::Select1, largest, d, Pattern::Uniform, cfg.seed, cfg.options));
      }
    }
  }
  if (wants("construct")) {
    for (std::size_t n : cfg.sizes) {
      for (Structure s : kAllStructures) emit(run_construction(s, n, 0.5, cfg.seed, cfg.options));
    }
  }
  if (wants("space")) {
    for (std::size_t n : cfg.sizes) {
      for (BenchRecord& r : run_space_sweep(n, cfg.densities, cfg.seed)) emit(std::move(r));
    }
  }
  return out;
}

void write_csv_header(std::ostream& out) { out << kCsvHeader << '\n'; }

void write_csv_row(std::ostream& out, const BenchRecord& r) {
  const SpaceReport& sp = r.space;
  const std::optional<double> select_index =
      sp.select1_samples || sp.select0_samples ? std::optional<double>(sp.select_index()) : std::nullopt;
  char density[32];
  std::snprintf(density, sizeof density, "%g", r.density);
  out << r.structure << ',' << r.op << ',' << r.n << ',' << density << ',' << r.pattern << ','
      << format_optional(r.mean_ns, "%.3f") << ',' << format_optional(r.stddev_ns, "%.3f") << ','
      << (r.reps ? std::to_string(r.reps) : std::string()) << ',' << format_optional(sp.raw, "%.6f") << ','
      << format_optional(sp.rank_index, "%.6f") << ',' << format_optional(select_index, "%.6f") << ','
      << format_optional(sp.offsets, "%.6f") << ',' << format_optional(sp.structural, "%.6f") << ','
      << format_optional(sp.total(), "%.6f") << '\n';
}

std::vector<std::string> validate_csv(std::istream& in) {
  std::vector<std::string> errors;
  std::string line;
  if (!std::getline(in, line)) return {"missing header"};
  if (line != kCsvHeader) errors.push_back("unexpected header: " + line);

  const std::vector<std::string> structures{"BlockBitVec", "FastBitVec", "RRRBitVec"};
  const std::vector<std::string> ops{"rank1", "select1", "select0", "build", "space"};
  const std::vector<std::string> patterns{"uniform", "sequential", "iterator", ""};
  std::size_t row = 1;
  std::size_t data_rows = 0;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    ++data_rows;
    const auto f = split_csv_line(line);
    auto err = [&](const std::string& what) { errors.push_back("row " + std::to_string(row) + ": " + what); };
    if (f.size() != 14) {
      err("expected 14 fields, got " + std::to_string(f.size()));
      continue;
    }
    if (std::find(structures.begin(), structures.end(), f[0]) == structures.end()) err("bad structure " + f[0]);
    if (std::find(ops.begin(), ops.end(), f[1]) == ops.end()) err("bad op " + f[1]);
    if (!parses_as_count(f[2]) || f[2] == "0") err("bad n " + f[2]);
    if (!parses_as_double(f[3]) || std::stod(f[3]) < 0.0 || std::stod(f[3]) > 1.0) err("bad density " + f[3]);
    if (std::find(patterns.begin(), patterns.end(), f[4]) == patterns.end()) err("bad pattern " + f[4]);
    const bool timed = f[1] != "space";
    if (timed) {
      if (!parses_as_double(f[5]) || std::stod(f[5]) <= 0.0) err("missing or non-positive mean_ns");
      if (!parses_as_double(f[6])) err("missing stddev_ns");
      if (!parses_as_count(f[7]) || std::stoul(f[7]) < 5) err("reps must be >= 5");
    }
    if ((f[1] == "rank1" || f[1] == "select1" || f[1] == "select0") && f[4].empty()) err("missing pattern");
    for (std::size_t c = 8; c < 14; ++c) {
      if (!f[c].empty() && !parses_as_double(f[c])) err("non-numeric field " + std::to_string(c));
    }
    if (f[13].empty()) err("missing total_bpe");
  }
  if (data_rows == 0) errors.push_back("no data rows");
  return errors;
}

}  // namespace succinct::bench
