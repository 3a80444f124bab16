#pragma once

#include <string>
#include <utility>
#include <vector>

namespace disthyp {

// One plotted series: scatter points, optionally connected in order.
struct SvgSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;
  bool connect = false;
  bool dashed = false;
};

struct SvgChart {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<SvgSeries> series;
  bool diagonal = false;  // draw the y = x reference line
};

// Renders a fixed-size chart. Output is deterministic: no timestamps, the
// colour of a series depends only on its index, and coordinates are
// formatted with fixed precision.
std::string render_svg(const SvgChart& chart);
void write_svg(const std::string& path, const SvgChart& chart);

}  // namespace disthyp
