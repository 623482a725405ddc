#include "sfrkit/trace_io.hpp"

#include <cmath>
#include <cstdio>

#include "sfrkit/errors.hpp"

namespace sfrkit {

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) return "0";  // folds -0 into 0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

CsvWriter::CsvWriter(std::ostream& out, std::initializer_list<std::string> header)
    : CsvWriter(out, std::vector<std::string>(header)) {}

CsvWriter::CsvWriter(std::ostream& out, const std::vector<std::string>& header)
    : out_(out), columns_(header.size()) {
  for (std::size_t i = 0; i < header.size(); ++i) out_ << (i ? "," : "") << header[i];
  out_ << '\n';
}

void CsvWriter::row(std::span<const double> values) {
  if (values.size() != columns_) throw InvalidInput("CSV row width does not match header");
  for (std::size_t i = 0; i < values.size(); ++i) out_ << (i ? "," : "") << format_number(values[i]);
  out_ << '\n';
}

void CsvWriter::row(std::initializer_list<double> values) {
  row(std::span<const double>(values.begin(), values.size()));
}

void write_trace_csv(std::ostream& out, const FrequencyTrace& trace) {
  CsvWriter csv(out, {"t_s", "delta_f_hz"});
  for (std::size_t i = 0; i < trace.size(); ++i) csv.row({trace.time_at(i), trace.samples[static_cast<Eigen::Index>(i)]});
}

}  // namespace sfrkit
