#include "disthyp/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "disthyp/errors.hpp"

namespace disthyp {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 440.0;
constexpr double kLeft = 64.0;
constexpr double kRight = 24.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 52.0;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};
constexpr int kPaletteSize = 8;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

std::string escape_xml(const std::string& s) {
  std::string out;
  out.reserve(s.size());
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

struct Range {
  double lo = 0.0;
  double hi = 1.0;
};

Range padded_range(double lo, double hi) {
  if (!(lo <= hi)) {  // no finite points at all
    lo = 0.0;
    hi = 1.0;
  }
  double span = hi - lo;
  if (span <= 0.0) span = std::max(1.0, std::abs(hi));
  return {lo - 0.05 * span, hi + 0.05 * span};
}

}  // namespace

std::string render_svg(const SvgChart& chart) {
  double x_lo = std::numeric_limits<double>::infinity();
  double x_hi = -x_lo;
  double y_lo = x_lo;
  double y_hi = -x_lo;
  for (const auto& s : chart.series)
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      x_lo = std::min(x_lo, x);
      x_hi = std::max(x_hi, x);
      y_lo = std::min(y_lo, y);
      y_hi = std::max(y_hi, y);
    }
  const Range xr = padded_range(x_lo, x_hi);
  const Range yr = padded_range(y_lo, y_hi);

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const auto to_x = [&](double x) {
    return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * plot_w;
  };
  const auto to_y = [&](double y) {
    return kTop + plot_h - (y - yr.lo) / (yr.hi - yr.lo) * plot_h;
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) +
         "\" height=\"" + num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) +
         " " + num(kHeight) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + num(kWidth / 2) + "\" y=\"22\" font-family=\"sans-serif\""
         " font-size=\"15\" text-anchor=\"middle\">" +
         escape_xml(chart.title) + "</text>\n";

  // Axes and ticks.
  svg += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" +
         num(plot_w) + "\" height=\"" + num(plot_h) +
         "\" fill=\"none\" stroke=\"#333333\"/>\n";
  constexpr int kTicks = 5;
  for (int i = 0; i <= kTicks; ++i) {
    const double fx = xr.lo + (xr.hi - xr.lo) * i / kTicks;
    const double px = to_x(fx);
    svg += "<line x1=\"" + num(px) + "\" y1=\"" + num(kTop + plot_h) +
           "\" x2=\"" + num(px) + "\" y2=\"" + num(kTop + plot_h + 5) +
           "\" stroke=\"#333333\"/>\n";
    svg += "<text x=\"" + num(px) + "\" y=\"" + num(kTop + plot_h + 18) +
           "\" font-family=\"sans-serif\" font-size=\"11\""
           " text-anchor=\"middle\">" + tick_label(fx) + "</text>\n";
    const double fy = yr.lo + (yr.hi - yr.lo) * i / kTicks;
    const double py = to_y(fy);
    svg += "<line x1=\"" + num(kLeft - 5) + "\" y1=\"" + num(py) + "\" x2=\"" +
           num(kLeft) + "\" y2=\"" + num(py) + "\" stroke=\"#333333\"/>\n";
    svg += "<text x=\"" + num(kLeft - 8) + "\" y=\"" + num(py + 4) +
           "\" font-family=\"sans-serif\" font-size=\"11\""
           " text-anchor=\"end\">" + tick_label(fy) + "</text>\n";
  }
  svg += "<text x=\"" + num(kLeft + plot_w / 2) + "\" y=\"" +
         num(kHeight - 12) + "\" font-family=\"sans-serif\" font-size=\"13\""
         " text-anchor=\"middle\">" + escape_xml(chart.x_label) + "</text>\n";
  svg += "<text x=\"16\" y=\"" + num(kTop + plot_h / 2) +
         "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\""
         " transform=\"rotate(-90 16 " + num(kTop + plot_h / 2) + ")\">" +
         escape_xml(chart.y_label) + "</text>\n";

  if (chart.diagonal) {
    const double lo = std::max(xr.lo, yr.lo);
    const double hi = std::min(xr.hi, yr.hi);
    if (lo < hi)
      svg += "<line x1=\"" + num(to_x(lo)) + "\" y1=\"" + num(to_y(lo)) +
             "\" x2=\"" + num(to_x(hi)) + "\" y2=\"" + num(to_y(hi)) +
             "\" stroke=\"#999999\" stroke-dasharray=\"5,4\"/>\n";
  }

  for (std::size_t si = 0; si < chart.series.size(); ++si) {
    const auto& s = chart.series[si];
    const char* color = kPalette[si % kPaletteSize];
    if (s.connect && s.points.size() > 1) {
      std::string path;
      bool first = true;
      for (const auto& [x, y] : s.points) {
        if (!std::isfinite(x) || !std::isfinite(y)) continue;
        path += (first ? "M" : " L");
        path += num(to_x(x)) + " " + num(to_y(y));
        first = false;
      }
      svg += "<path d=\"" + path + "\" fill=\"none\" stroke=\"" + color +
             "\" stroke-width=\"1.5\"" +
             (s.dashed ? " stroke-dasharray=\"6,4\"" : "") + "/>\n";
    }
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      svg += "<circle cx=\"" + num(to_x(x)) + "\" cy=\"" + num(to_y(y)) +
             "\" r=\"3\" fill=\"" + color + "\"/>\n";
    }
  }

  // Legend in the top-right corner of the plot area.
  double ly = kTop + 14;
  for (std::size_t si = 0; si < chart.series.size(); ++si) {
    const auto& s = chart.series[si];
    if (s.label.empty()) continue;
    const char* color = kPalette[si % kPaletteSize];
    const double lx = kLeft + plot_w - 150;
    svg += "<rect x=\"" + num(lx) + "\" y=\"" + num(ly - 8) +
           "\" width=\"10\" height=\"10\" fill=\"" + color + "\"/>\n";
    svg += "<text x=\"" + num(lx + 16) + "\" y=\"" + num(ly + 1) +
           "\" font-family=\"sans-serif\" font-size=\"11\">" +
           escape_xml(s.label) + "</text>\n";
    ly += 16;
  }

  svg += "</svg>\n";
  return svg;
}

void write_svg(const std::string& path, const SvgChart& chart) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << render_svg(chart);
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace disthyp
