#pragma once

#include <string>
#include <vector>

namespace losq {

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  bool dashed = false;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  /// y values below the floor (including −∞) are drawn at the floor.
  double y_floor = -60.0;
  std::vector<PlotSeries> series;
};

/// Static line plot: axes with ticks, up to a handful of series, legend.
std::string render_svg(const PlotSpec& spec);

}  // namespace losq
