#pragma once

#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "sfrkit/frequency_trace.hpp"

namespace sfrkit {

/// Fixed 9-significant-digit rendering ("%.9g"), independent of the locale.
std::string format_number(double value);

/// Comma-separated rows with `\n` line ends and a fixed number format.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, std::initializer_list<std::string> header);
  CsvWriter(std::ostream& out, const std::vector<std::string>& header);

  void row(std::span<const double> values);
  void row(std::initializer_list<double> values);

 private:
  std::ostream& out_;
  std::size_t columns_;
};

/// `t_s,delta_f_hz` CSV of a trace.
void write_trace_csv(std::ostream& out, const FrequencyTrace& trace);

}  // namespace sfrkit
