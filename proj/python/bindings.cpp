#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "succinct/bench.hpp"
#include "succinct/bits.hpp"
#include "succinct/block_bitvec.hpp"
#include "succinct/fast_bitvec.hpp"
#include "succinct/fuzz.hpp"
#include "succinct/rrr_bitvec.hpp"
#include "succinct/rrr_coding.hpp"

namespace py = pybind11;
using namespace succinct;

namespace {

py::dict space_dict(const SpaceReport& r) {
  py::dict d;
  auto put = [&](const char* key, const std::optional<double>& v) {
    if (v) d[key] = *v;
  };
  put("raw", r.raw);
  put("rank_index", r.rank_index);
  put("select1_samples", r.select1_samples);
  put("select0_samples", r.select0_samples);
  put("offsets", r.offsets);
  put("structural", r.structural);
  d["total"] = r.total();
  d["total_excluding_select0"] = r.total_excluding_select0();
  return d;
}

template <typename S>
void bind_structure(py::module_& m, const char* name, const char* doc) {
  py::class_<S>(m, name, doc)
      .def(py::init([](const RawBitVector& v) { return S(RawBitVector(v)); }), py::arg("bits"))
      .def("__len__", &S::size)
      .def("count_ones", &S::count_ones)
      .def("count_zeros", &S::count_zeros)
      .def("get_bit", &S::get_bit, py::arg("i"))
      .def("rank1", &S::rank1, py::arg("i"), "Number of ones in positions [0, i].")
      .def("rank0", &S::rank0, py::arg("i"), "Number of zeros in positions [0, i].")
      .def("select1", &S::select1, py::arg("j"), "Position of the (j+1)-th one.")
      .def("select0", &S::select0, py::arg("j"), "Position of the (j+1)-th zero.")
      .def("space_report", [](const S& s) { return space_dict(s.space_report()); });
}

py::dict record_dict(const bench::BenchRecord& r) {
  py::dict d;
  d["structure"] = r.structure;
  d["op"] = r.op;
  d["n"] = r.n;
  d["density"] = r.density;
  d["pattern"] = r.pattern;
  d["mean_ns"] = r.mean_ns ? py::object(py::float_(*r.mean_ns)) : py::object(py::none());
  d["stddev_ns"] = r.stddev_ns ? py::object(py::float_(*r.stddev_ns)) : py::object(py::none());
  d["reps"] = r.reps;
  d["space"] = space_dict(r.space);
  d["checksum"] = r.checksum;
  d["checksum_ok"] = r.checksum_ok;
  return d;
}

template <typename E>
E parse_enum(const std::string& text, std::initializer_list<E> values, const char* what) {
  for (E v : values) {
    if (bench::name(v) == text) return v;
  }
  throw py::value_error(std::string("unknown ") + what + ": " + text);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Rank/select bit vectors (two-level block, asymmetric sampled, RRR compressed).";

  py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);

  py::class_<RawBitVector>(m, "RawBitVector", "Plain bit array, LSB-first over 64-bit words.")
      .def(py::init<std::size_t, bool>(), py::arg("len_bits"), py::arg("value") = false)
      .def_static("from_string", &RawBitVector::from_string, py::arg("bits"))
      .def_static(
          "from_bits",
          [](const std::vector<bool>& bits) {
            RawBitVector v(bits.size());
            for (std::size_t i = 0; i < bits.size(); ++i) v.set_bit(i, bits[i]);
            return v;
          },
          py::arg("bits"))
      .def("__len__", &RawBitVector::size)
      .def("get_bit", &RawBitVector::get_bit, py::arg("i"))
      .def("set_bit", &RawBitVector::set_bit, py::arg("i"), py::arg("value"))
      .def("count_ones", &RawBitVector::count_ones)
      .def("words", [](const RawBitVector& v) { return std::vector<std::uint64_t>(v.words().begin(), v.words().end()); })
      .def(py::self == py::self);

  m.def(
      "generate",
      [](std::uint64_t seed, double density, std::size_t len_bits) {
        return generate(GeneratorSpec{seed, density, len_bits});
      },
      py::arg("seed"), py::arg("density"), py::arg("len_bits"),
      "Deterministic Bernoulli(density) bits from std::mt19937_64(seed).");
  m.def(
      "serialize", [](const RawBitVector& v) {
        const auto bytes = serialize(v);
        return py::bytes(reinterpret_cast<const char*>(bytes.data()), bytes.size());
      },
      py::arg("bits"));
  m.def(
      "deserialize",
      [](const py::bytes& data) {
        const std::string s = data;
        return deserialize(std::span(reinterpret_cast<const std::uint8_t*>(s.data()), s.size()));
      },
      py::arg("data"));

  bind_structure<BlockBitVec>(m, "BlockBitVec", "2048/512-bit two-level rank directory, binary-search select.");
  bind_structure<FastBitVec>(m, "FastBitVec", "4096/256-bit rank directory with rate-256 select sampling.");
  py::class_<RRRBitVec>(m, "RRRBitVec", "RRR-compressed vector, block size 15, 240-bit superblocks.")
      .def(py::init([](const RawBitVector& v) { return RRRBitVec(v); }), py::arg("bits"))
      .def("__len__", &RRRBitVec::size)
      .def("count_ones", &RRRBitVec::count_ones)
      .def("count_zeros", &RRRBitVec::count_zeros)
      .def("get_bit", &RRRBitVec::get_bit, py::arg("i"))
      .def("rank1", &RRRBitVec::rank1, py::arg("i"))
      .def("rank0", &RRRBitVec::rank0, py::arg("i"))
      .def("select1", &RRRBitVec::select1, py::arg("j"))
      .def("select0", &RRRBitVec::select0, py::arg("j"))
      .def("decompress", &RRRBitVec::decompress)
      .def("offset_stream_bits", &RRRBitVec::offset_stream_bits)
      .def("space_report", [](const RRRBitVec& s) { return space_dict(s.space_report()); });

  auto rrr_mod = m.def_submodule("rrr", "Block-size-15 RRR coding and space model.");
  rrr_mod.def(
      "encode_block",
      [](std::uint32_t x) {
        const auto code = rrr::encode_block(x);
        return py::make_tuple(code.cls, code.offset);
      },
      py::arg("x"), "(class, offset) of a 15-bit block.");
  rrr_mod.def("decode_block", &rrr::decode_block, py::arg("cls"), py::arg("offset"));
  rrr_mod.def("width", [](unsigned c) {
    if (c > rrr::kBlockBits) throw py::value_error("class must be <= 15");
    return rrr::kWidth[c];
  });
  rrr_mod.def("class_probability", &rrr::class_probability, py::arg("p"), py::arg("c"));
  rrr_mod.def("expected_offset_bits", &rrr::expected_offset_bits, py::arg("p"));
  rrr_mod.def("expected_candidate_superblocks", &rrr::expected_candidate_superblocks, py::arg("d"));

  auto fuzz_mod = m.def_submodule("fuzz", "Oracle-checked correctness suites.");
  fuzz_mod.def(
      "run",
      [](const std::string& suite, std::uint64_t seed, double scale) {
        std::vector<fuzz::FuzzReport> reports;
        {
          py::gil_scoped_release release;
          reports = fuzz::run_suite(suite, seed, scale);
        }
        py::list out;
        for (const auto& r : reports) {
          py::dict d;
          d["suite"] = r.suite;
          d["vectors"] = r.vectors;
          d["assertions"] = r.assertions;
          d["failures"] = r.failure_count;
          out.append(d);
        }
        return out;
      },
      py::arg("suite") = "walk", py::arg("seed") = 1, py::arg("scale") = 1.0);

  auto bench_mod = m.def_submodule("bench", "Latency, construction and space measurements.");
  bench_mod.def(
      "run_latency",
      [](const std::string& structure, const std::string& op, std::size_t n, double density,
         const std::string& pattern, std::uint64_t seed, long warmup_ms, std::size_t reps, std::size_t iterations) {
        using namespace bench;
        const BenchOptions options{std::chrono::milliseconds(warmup_ms), reps, iterations};
        const auto s = parse_enum(structure, {Structure::Block, Structure::Fast, Structure::RRR}, "structure");
        const auto o = parse_enum(op, {Operation::Rank1, Operation::Select1, Operation::Select0}, "operation");
        const auto p = parse_enum(pattern, {Pattern::Uniform, Pattern::Sequential, Pattern::Iterator}, "pattern");
        BenchRecord r;
        {
          py::gil_scoped_release release;
          r = run_latency(s, o, n, density, p, seed, options);
        }
        return record_dict(r);
      },
      py::arg("structure"), py::arg("op"), py::arg("n"), py::arg("density") = 0.5, py::arg("pattern") = "uniform",
      py::arg("seed") = 42, py::arg("warmup_ms") = 500, py::arg("reps") = 5, py::arg("iterations") = 100000);
  bench_mod.def(
      "space_sweep",
      [](std::size_t n, const std::vector<double>& densities, std::uint64_t seed) {
        py::list out;
        for (const auto& r : bench::run_space_sweep(n, densities, seed)) out.append(record_dict(r));
        return out;
      },
      py::arg("n"), py::arg("densities"), py::arg("seed") = 42);
}
