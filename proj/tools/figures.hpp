#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sfrkit::cli {

/// Names accepted by `reproduce-figure`, in listing order.
const std::vector<std::string>& figure_names();

/// Writes the data table behind a figure as CSV. Summary notes (if any) go
/// to `notes`. Throws InvalidInput for an unknown name.
void write_figure(const std::string& name, std::ostream& out, std::ostream& notes, unsigned threads);

}  // namespace sfrkit::cli
