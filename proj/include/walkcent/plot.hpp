#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace walkcent {

/// Shortest decimal that round-trips to the same binary64 value.
std::string round_trip(double v);

/// Two-column CSV "parameter,difference" with round-trip precision.
void write_difference_csv(std::ostream& out, std::span<const double> x, std::span<const double> y);

/// Static SVG line chart of the mesh with the zero axis and refined
/// crossings marked.
void write_line_chart_svg(std::ostream& out, std::span<const double> x, std::span<const double> y,
                          std::span<const double> crossings, const std::string& title,
                          const std::string& x_label, const std::string& y_label);

}  // namespace walkcent
