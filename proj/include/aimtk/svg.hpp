// Static SVG charts rendered directly from summary data. The CSV is the
// canonical artifact; these are regenerable conveniences.
#pragma once

#include <string>
#include <vector>

namespace aimtk::svg {

struct Series {
  std::string name;
  std::vector<double> y;
};

// Log-y line chart over a shared x vector (drawn in reverse so shrinking
// technology nodes read left to right).
std::string line_chart(const std::string& title, const std::string& x_label,
                       const std::string& y_label,
                       const std::vector<double>& x,
                       const std::vector<Series>& series, bool log_y = true,
                       bool reverse_x = false);

// Stacked bars: one bar per category, one colored segment per part.
std::string stacked_bars(const std::string& title, const std::string& y_label,
                         const std::vector<std::string>& categories,
                         const std::vector<Series>& parts);

}  // namespace aimtk::svg
