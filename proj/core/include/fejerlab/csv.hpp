#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "fejerlab/fourier.hpp"
#include "fejerlab/maximal.hpp"
#include "fejerlab/sampled.hpp"
#include "fejerlab/weight.hpp"

namespace fejerlab {

/// Minimal RFC 4180 writer: header row, '.' decimal separator, shortest
/// round-trip formatting for doubles.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  CsvWriter& header(std::initializer_list<std::string_view> columns);
  CsvWriter& field(double value);
  CsvWriter& field(long long value);
  CsvWriter& field(int value) { return field(static_cast<long long>(value)); }
  CsvWriter& field(std::size_t value) { return field(static_cast<long long>(value)); }
  CsvWriter& field(std::string_view text);
  CsvWriter& end_row();

 private:
  void separator();
  std::ostream& out_;
  bool row_started_ = false;
};

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double value);

/// angle,real,imag
void write_csv(std::ostream& out, const SampledFunction& f);
/// index,real,imag
void write_csv(std::ostream& out, const FourierCoefficients& f);
/// start,end,value
void write_csv(std::ostream& out, const Weight& w);
/// angle,value
void write_csv(std::ostream& out, const MaximalProfile& profile);

}  // namespace fejerlab
