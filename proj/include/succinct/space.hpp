#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "succinct/errors.hpp"

namespace succinct {

/// Per-component footprint in bits per element (component bits / N).
/// Components a structure does not have are left empty.
struct SpaceReport {
  std::size_t len_bits = 0;
  std::optional<double> raw;
  std::optional<double> rank_index;
  std::optional<double> select1_samples;
  std::optional<double> select0_samples;
  std::optional<double> offsets;     // RRR offset bitstream
  std::optional<double> structural;  // RRR classes + superblock directory

  double select_index() const { return select1_samples.value_or(0.0) + select0_samples.value_or(0.0); }

  double total() const { return total_excluding_select0() + select0_samples.value_or(0.0); }

  // Footprint with only the select1 samples counted.
  double total_excluding_select0() const {
    return raw.value_or(0.0) + rank_index.value_or(0.0) + select1_samples.value_or(0.0) + offsets.value_or(0.0) +
           structural.value_or(0.0);
  }
};

inline double bits_per_element(double bits, std::size_t len_bits) { return bits / static_cast<double>(len_bits); }

inline void require_nonempty_for_report(std::size_t len_bits, const char* who) {
  if (len_bits == 0) throw UndefinedReport(std::string(who) + ": bits per element undefined for an empty vector");
}

}  // namespace succinct
