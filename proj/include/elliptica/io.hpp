// Shared formatting helpers: 17-significant-digit decimal output (enough to
// round-trip a double bit-exactly) and small CSV utilities.

#pragma once

#include <cstdio>
#include <string>
#include <vector>

namespace elliptica::io {

/// Shortest-faithful decimal form with 17 significant digits.
inline std::string format_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

inline std::string csv_row(const std::vector<std::string>& fields) {
  std::string row;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) row += ',';
    row += fields[i];
  }
  row += '\n';
  return row;
}

}  // namespace elliptica::io
