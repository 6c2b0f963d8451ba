#include "losq/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "losq/error.hpp"

namespace losq {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 55.0;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

const char* kColors[] = {"#000000", "#808080", "#1f77b4", "#d62728"};

}  // namespace

std::string render_svg(const PlotSpec& spec) {
  if (spec.series.empty()) throw InvalidArgument("plot needs at least one series");

  const auto tx = [&](double x) { return spec.log_x ? std::log10(x) : x; };
  const auto ty = [&](double y) { return std::isnan(y) ? y : std::max(y, spec.y_floor); };

  double x_min = std::numeric_limits<double>::infinity();
  double x_max = -x_min;
  double y_min = x_min;
  double y_max = -x_min;
  for (const auto& s : spec.series) {
    if (s.x.size() != s.y.size()) throw InvalidArgument("series x and y differ in length");
    for (std::size_t k = 0; k < s.x.size(); ++k) {
      if (spec.log_x && !(s.x[k] > 0.0)) throw InvalidArgument("log axis needs positive x");
      const double y = ty(s.y[k]);
      if (std::isnan(y)) continue;
      x_min = std::min(x_min, tx(s.x[k]));
      x_max = std::max(x_max, tx(s.x[k]));
      y_min = std::min(y_min, y);
      y_max = std::max(y_max, y);
    }
  }
  if (!std::isfinite(x_min)) throw InvalidArgument("plot has no finite points");
  if (x_max == x_min) x_max = x_min + 1.0;
  if (y_max == y_min) y_max = y_min + 1.0;
  const double pad = 0.05 * (y_max - y_min);
  y_min -= pad;
  y_max += pad;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const auto px = [&](double x) { return kLeft + (tx(x) - x_min) / (x_max - x_min) * plot_w; };
  const auto py = [&](double y) { return kTop + (y_max - y) / (y_max - y_min) * plot_h; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kWidth) + "\" height=\"" +
         fmt(kHeight) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "<text x=\"" + fmt(kWidth / 2) + "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" +
         escape(spec.title) + "</text>\n";
  out += "<rect x=\"" + fmt(kLeft) + "\" y=\"" + fmt(kTop) + "\" width=\"" + fmt(plot_w) +
         "\" height=\"" + fmt(plot_h) + "\" fill=\"none\" stroke=\"black\"/>\n";

  // Ticks: five per axis, decades on a log axis.
  for (int k = 0; k <= 4; ++k) {
    const double yv = y_min + (y_max - y_min) * k / 4.0;
    const double y = py(yv);
    out += "<line x1=\"" + fmt(kLeft - 4) + "\" y1=\"" + fmt(y) + "\" x2=\"" + fmt(kLeft) +
           "\" y2=\"" + fmt(y) + "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + fmt(kLeft - 6) + "\" y=\"" + fmt(y + 4) + "\" text-anchor=\"end\">" +
           tick_label(std::round(yv * 1000.0) / 1000.0) + "</text>\n";
  }
  std::vector<double> x_ticks;
  if (spec.log_x) {
    for (double d = std::ceil(x_min); d <= std::floor(x_max); d += 1.0) x_ticks.push_back(d);
  } else {
    for (int k = 0; k <= 4; ++k) x_ticks.push_back(x_min + (x_max - x_min) * k / 4.0);
  }
  for (double t : x_ticks) {
    const double x = kLeft + (t - x_min) / (x_max - x_min) * plot_w;
    const double y0 = kTop + plot_h;
    out += "<line x1=\"" + fmt(x) + "\" y1=\"" + fmt(y0) + "\" x2=\"" + fmt(x) + "\" y2=\"" +
           fmt(y0 + 4) + "\" stroke=\"black\"/>\n";
    const std::string label =
        spec.log_x ? "1e" + tick_label(t) : tick_label(std::round(t * 1000.0) / 1000.0);
    out += "<text x=\"" + fmt(x) + "\" y=\"" + fmt(y0 + 18) + "\" text-anchor=\"middle\">" + label +
           "</text>\n";
  }
  out += "<text x=\"" + fmt(kLeft + plot_w / 2) + "\" y=\"" + fmt(kHeight - 12) +
         "\" text-anchor=\"middle\">" + escape(spec.x_label) + "</text>\n";
  out += "<text x=\"16\" y=\"" + fmt(kTop + plot_h / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
         fmt(kTop + plot_h / 2) + ")\">" + escape(spec.y_label) + "</text>\n";

  for (std::size_t s = 0; s < spec.series.size(); ++s) {
    const auto& series = spec.series[s];
    const char* color = kColors[s % std::size(kColors)];
    std::string points;
    for (std::size_t k = 0; k < series.x.size(); ++k) {
      const double y = ty(series.y[k]);
      if (std::isnan(y)) continue;
      if (!points.empty()) points += ' ';
      points += fmt(px(series.x[k])) + ',' + fmt(py(y));
    }
    out += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"1.5\"" +
           (series.dashed ? " stroke-dasharray=\"6,4\"" : "") + " points=\"" + points + "\"/>\n";
    const double ly = kTop + 16 + 16.0 * s;
    const double lx = kLeft + plot_w - 170;
    out += "<line x1=\"" + fmt(lx) + "\" y1=\"" + fmt(ly) + "\" x2=\"" + fmt(lx + 24) + "\" y2=\"" +
           fmt(ly) + "\" stroke=\"" + color + "\" stroke-width=\"1.5\"" +
           (series.dashed ? " stroke-dasharray=\"6,4\"" : "") + "/>\n";
    out += "<text x=\"" + fmt(lx + 30) + "\" y=\"" + fmt(ly + 4) + "\">" + escape(series.label) +
           "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace losq
