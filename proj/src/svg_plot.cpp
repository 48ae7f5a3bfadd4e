#include "visclab/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <limits>

namespace visclab {
namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 200.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;
constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#17becf"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Axis {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void finish() {
    if (!std::isfinite(lo)) lo = 0.0, hi = 1.0;
    if (hi - lo < 1e-300) {
      const double pad = std::max(1e-12, std::abs(lo) * 0.05);
      lo -= pad, hi += pad;
    }
  }
};

}  // namespace

std::string render_svg(const std::string& title, const std::string& x_label, const std::string& y_label,
                       const std::vector<Curve>& curves, bool log_log) {
  auto tx = [&](double v) { return log_log ? (v > 0.0 ? std::log10(v) : std::nan("")) : v; };
  Axis ax, ay;
  for (const auto& c : curves)
    for (const auto& [x, y] : c.points) {
      if (!std::isfinite(tx(x)) || !std::isfinite(tx(y))) continue;
      ax.add(tx(x));
      ay.add(tx(y));
    }
  ax.finish();
  ay.finish();
  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto px = [&](double v) { return kLeft + (v - ax.lo) / (ax.hi - ax.lo) * pw; };
  auto py = [&](double v) { return kTop + ph - (v - ay.lo) / (ay.hi - ay.lo) * ph; };

  std::string s;
  s += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">\n", kWidth,
      kHeight, kWidth, kHeight);
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s += fmt::format("<text x=\"{}\" y=\"24\" font-family=\"sans-serif\" font-size=\"15\">{}</text>\n", kLeft,
                   escape(title));
  s += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"#444\"/>\n", kLeft,
                   kTop, pw, ph);
  for (int i = 0; i <= 4; ++i) {
    const double fx = ax.lo + (ax.hi - ax.lo) * i / 4.0;
    const double fy = ay.lo + (ay.hi - ay.lo) * i / 4.0;
    const auto lx = log_log ? fmt::format("1e{:.2f}", fx) : fmt::format("{:.3g}", fx);
    const auto ly = log_log ? fmt::format("1e{:.2f}", fy) : fmt::format("{:.3g}", fy);
    s += fmt::format(
        "<text x=\"{:.2f}\" y=\"{:.2f}\" font-family=\"sans-serif\" font-size=\"11\" "
        "text-anchor=\"middle\">{}</text>\n",
        px(fx), kTop + ph + 16, lx);
    s += fmt::format(
        "<text x=\"{:.2f}\" y=\"{:.2f}\" font-family=\"sans-serif\" font-size=\"11\" "
        "text-anchor=\"end\">{}</text>\n",
        kLeft - 6, py(fy) + 4, ly);
  }
  s += fmt::format(
      "<text x=\"{:.2f}\" y=\"{:.2f}\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">{}</text>\n",
      kLeft + pw / 2, kHeight - 18, escape(x_label));
  s += fmt::format(
      "<text x=\"18\" y=\"{:.2f}\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" "
      "transform=\"rotate(-90 18 {:.2f})\">{}</text>\n",
      kTop + ph / 2, kTop + ph / 2, escape(y_label));

  for (std::size_t k = 0; k < curves.size(); ++k) {
    const auto& c = curves[k];
    const char* color = kColors[k % std::size(kColors)];
    std::string pts;
    std::optional<std::pair<double, double>> first;
    double last_x = 0.0;
    for (const auto& [x, y] : c.points) {
      const double X = tx(x), Y = tx(y);
      if (!std::isfinite(X) || !std::isfinite(Y)) continue;
      if (!first) first = {X, Y};
      last_x = X;
      pts += fmt::format("{:.2f},{:.2f} ", px(X), py(Y));
    }
    if (!pts.empty()) pts.pop_back();
    s += fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.6\" points=\"{}\"/>\n", color, pts);
    if (log_log && c.guide_slope && first) {
      const double y1 = first->second + *c.guide_slope * (last_x - first->first);
      s += fmt::format(
          "<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"{}\" stroke-dasharray=\"5,4\"/>\n",
          px(first->first), py(first->second), px(last_x), py(std::clamp(y1, ay.lo, ay.hi)), color);
    }
    const double ly = kTop + 14.0 + 18.0 * static_cast<double>(k);
    s += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"{}\" stroke-width=\"2\"/>\n",
                     kLeft + pw + 12, ly, kLeft + pw + 32, ly, color);
    std::string text = c.label;
    if (c.guide_slope) text += fmt::format(" (slope {:g})", *c.guide_slope);
    s += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" font-family=\"sans-serif\" font-size=\"11\">{}</text>\n",
                     kLeft + pw + 36, ly + 4, escape(text));
  }
  s += "</svg>\n";
  return s;
}

}  // namespace visclab
