#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace visclab {

struct Curve {
  std::string label;
  std::vector<std::pair<double, double>> points;
  /// Dashed reference line of this slope through the curve's first point (log-log plots only).
  std::optional<double> guide_slope;
};

/// Static SVG with one polyline per curve. No timestamps or random ids, so
/// identical input gives identical bytes.
std::string render_svg(const std::string& title, const std::string& x_label, const std::string& y_label,
                       const std::vector<Curve>& curves, bool log_log);

}  // namespace visclab
