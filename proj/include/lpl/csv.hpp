#pragma once

#include <string>
#include <vector>

namespace lpl {

/// Locale-independent formatting with 17 significant digits (round-trip safe).
std::string format_csv_value(double v);

/// Appends one data row. Creates the file with `header` on first use; on an
/// existing file the header must match or the call fails with the file left
/// untouched. The row is written with a single append.
void append_csv(const std::string& path, const std::string& header,
                const std::vector<double>& row);

} // namespace lpl
