#include "fejerlab/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace fejerlab {

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return {buf.data(), res.ptr};
}

void CsvWriter::separator() {
  if (row_started_) out_ << ',';
  row_started_ = true;
}

CsvWriter& CsvWriter::header(std::initializer_list<std::string_view> columns) {
  for (auto c : columns) field(c);
  return end_row();
}

CsvWriter& CsvWriter::field(double value) {
  separator();
  out_ << format_double(value);
  return *this;
}

CsvWriter& CsvWriter::field(long long value) {
  separator();
  out_ << value;
  return *this;
}

CsvWriter& CsvWriter::field(std::string_view text) {
  separator();
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) {
    out_ << text;
    return *this;
  }
  out_ << '"';
  for (char ch : text) {
    if (ch == '"') out_ << '"';
    out_ << ch;
  }
  out_ << '"';
  return *this;
}

CsvWriter& CsvWriter::end_row() {
  out_ << '\n';
  row_started_ = false;
  return *this;
}

void write_csv(std::ostream& out, const SampledFunction& f) {
  CsvWriter csv(out);
  csv.header({"angle", "real", "imag"});
  const auto nodes = f.grid().nodes();
  for (std::size_t i = 0; i < f.size(); ++i)
    csv.field(nodes[i]).field(f[i].real()).field(f[i].imag()).end_row();
}

void write_csv(std::ostream& out, const FourierCoefficients& f) {
  CsvWriter csv(out);
  csv.header({"index", "real", "imag"});
  for (int k = -f.window(); k <= f.window(); ++k)
    csv.field(k).field(f.at(k).real()).field(f.at(k).imag()).end_row();
}

void write_csv(std::ostream& out, const Weight& w) {
  CsvWriter csv(out);
  csv.header({"start", "end", "value"});
  const auto& p = w.profile();
  for (std::size_t j = 0; j < p.pieces(); ++j)
    csv.field(p.left(j)).field(p.right(j)).field(p.values()[j].real()).end_row();
}

void write_csv(std::ostream& out, const MaximalProfile& profile) {
  CsvWriter csv(out);
  csv.header({"angle", "value"});
  const auto nodes = profile.grid->nodes();
  for (std::size_t i = 0; i < profile.values.size(); ++i)
    csv.field(nodes[i]).field(profile.values[i]).end_row();
}

}  // namespace fejerlab
