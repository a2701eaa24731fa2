#pragma once

#include <stdexcept>
#include <string>

namespace succinct {

// Bit position outside [0, N).
class IndexOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// select argument j not smaller than the number of matching bits.
class RankOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Malformed serialized stream (magic, version, truncation, padding).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Vector too long for the fixed-width fields of a structure.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Space report requested for an empty vector (bits per element undefined).
class UndefinedReport : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace succinct
