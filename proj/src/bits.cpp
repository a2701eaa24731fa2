#include "succinct/bits.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace succinct {

unsigned select_in_word(std::uint64_t w, unsigned k) {
  if (k >= popcount_word(w)) {
    throw RankOutOfRange("select_in_word: k=" + std::to_string(k) + " but word has " +
                         std::to_string(popcount_word(w)) + " set bits");
  }
  return detail::select_in_word_unchecked(w, k);
}

RawBitVector::RawBitVector(std::size_t len_bits, bool value)
    : words_(words_for(len_bits), value ? ~std::uint64_t{0} : 0), len_bits_(len_bits) {
  if (value && len_bits % kWordBits != 0) words_.back() &= low_mask(len_bits % kWordBits);
}

RawBitVector RawBitVector::from_words(std::vector<std::uint64_t> words, std::size_t len_bits) {
  if (words.size() != words_for(len_bits)) {
    throw std::invalid_argument("from_words: expected " + std::to_string(words_for(len_bits)) +
                                " words for " + std::to_string(len_bits) + " bits, got " +
                                std::to_string(words.size()));
  }
  RawBitVector v;
  v.words_ = std::move(words);
  v.len_bits_ = len_bits;
  if (len_bits % kWordBits != 0) v.words_.back() &= low_mask(len_bits % kWordBits);
  return v;
}

RawBitVector RawBitVector::from_string(std::string_view bits) {
  RawBitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set_bit(i, true);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("from_string: unexpected character '" + std::string(1, bits[i]) + "'");
    }
  }
  return v;
}

RawBitVector RawBitVector::from_positions(std::size_t len_bits, std::span<const std::size_t> ones) {
  RawBitVector v(len_bits);
  for (std::size_t p : ones) v.set_bit(p, true);
  return v;
}

bool RawBitVector::get_bit(std::size_t i) const {
  if (i >= len_bits_) {
    throw IndexOutOfRange("get_bit: index " + std::to_string(i) + " >= length " + std::to_string(len_bits_));
  }
  return bit(i);
}

void RawBitVector::set_bit(std::size_t i, bool value) {
  if (i >= len_bits_) {
    throw IndexOutOfRange("set_bit: index " + std::to_string(i) + " >= length " + std::to_string(len_bits_));
  }
  const std::uint64_t m = std::uint64_t{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= m;
  } else {
    words_[i / kWordBits] &= ~m;
  }
}

std::uint64_t RawBitVector::extract(std::size_t pos, unsigned len) const {
  if (len == 0 || pos >= len_bits_) return 0;
  const std::size_t wi = pos / kWordBits;
  const unsigned shift = pos % kWordBits;
  std::uint64_t out = words_[wi] >> shift;
  if (shift != 0 && shift + len > kWordBits && wi + 1 < words_.size()) {
    out |= words_[wi + 1] << (kWordBits - shift);
  }
  return out & low_mask(len);
}

std::size_t RawBitVector::count_ones() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += popcount_word(w);
  return total;
}

RawBitVector generate(const GeneratorSpec& spec) {
  if (!(spec.density >= 0.0 && spec.density <= 1.0)) {
    throw std::domain_error("generate: density must lie in [0, 1]");
  }
  if (spec.density == 1.0) return RawBitVector(spec.len_bits, true);

  // density < 1, so the product is < 2^64 and the conversion is exact enough.
  const auto threshold = static_cast<std::uint64_t>(std::ldexp(spec.density, 64));
  std::mt19937_64 rng(spec.seed);
  std::vector<std::uint64_t> words(words_for(spec.len_bits), 0);
  for (std::size_t i = 0; i < spec.len_bits; ++i) {
    if (rng() < threshold) words[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
  }
  return RawBitVector::from_words(std::move(words), spec.len_bits);
}

namespace {

template <typename T>
void put_le(std::vector<std::uint8_t>& out, T value) {
  for (std::size_t b = 0; b < sizeof(T); ++b) out.push_back(static_cast<std::uint8_t>(value >> (8 * b)));
}

template <typename T>
T get_le(std::span<const std::uint8_t> in, std::size_t at) {
  T value = 0;
  for (std::size_t b = 0; b < sizeof(T); ++b) value |= static_cast<T>(in[at + b]) << (8 * b);
  return value;
}

}  // namespace

std::vector<std::uint8_t> serialize(const RawBitVector& v) {
  std::vector<std::uint8_t> out;
  out.reserve(kSerialHeaderBytes + v.words().size() * 8);
  for (char c : kSerialMagic) out.push_back(static_cast<std::uint8_t>(c));
  put_le<std::uint32_t>(out, kSerialVersion);
  put_le<std::uint64_t>(out, v.size());
  for (std::uint64_t w : v.words()) put_le<std::uint64_t>(out, w);
  return out;
}

RawBitVector deserialize(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kSerialHeaderBytes) throw FormatError("deserialize: truncated header");
  for (std::size_t i = 0; i < kSerialMagic.size(); ++i) {
    if (bytes[i] != static_cast<std::uint8_t>(kSerialMagic[i])) throw FormatError("deserialize: bad magic");
  }
  const auto version = get_le<std::uint32_t>(bytes, 4);
  if (version != kSerialVersion) {
    throw FormatError("deserialize: unsupported version " + std::to_string(version));
  }
  const auto len_bits = get_le<std::uint64_t>(bytes, 8);
  const std::size_t payload = bytes.size() - kSerialHeaderBytes;
  if (payload % 8 != 0 || len_bits > payload * 8 || payload / 8 != words_for(len_bits)) {
    throw FormatError("deserialize: payload of " + std::to_string(payload) + " bytes does not match length " +
                      std::to_string(len_bits));
  }
  std::vector<std::uint64_t> words(payload / 8);
  for (std::size_t w = 0; w < words.size(); ++w) {
    words[w] = get_le<std::uint64_t>(bytes, kSerialHeaderBytes + 8 * w);
  }
  if (len_bits % kWordBits != 0 && (words.back() & ~low_mask(len_bits % kWordBits)) != 0) {
    throw FormatError("deserialize: non-zero padding bits");
  }
  return RawBitVector::from_words(std::move(words), len_bits);
}

}  // namespace succinct
