// Copyright 2026 The biomeval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "biomeval/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "biomeval/error.hpp"

namespace biomeval {
namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                    "#9467bd", "#ff7f0e", "#8c564b",
                                    "#e377c2", "#7f7f7f"};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 55.0;

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

std::string escape_xml(const std::string& s) {
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

struct Frame {
  double x0, x1, y0, y1;          // data domain
  double px0, px1, py0, py1;      // pixel rect (py0 is the top edge)
  bool log_x = false;

  double map_x(double x) const {
    const double t = log_x ? (std::log10(x) - std::log10(x0)) /
                                 (std::log10(x1) - std::log10(x0))
                           : (x - x0) / (x1 - x0);
    return px0 + t * (px1 - px0);
  }
  double map_y(double y) const {
    const double t = (y - y0) / (y1 - y0);
    return py1 - t * (py1 - py0);
  }
};

std::vector<double> linear_ticks(double lo, double hi) {
  const double raw = (hi - lo) / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double norm = raw / mag;
  double step;
  if (norm <= 1.0) step = mag;
  else if (norm <= 2.0) step = 2.0 * mag;
  else if (norm <= 2.5) step = 2.5 * mag;
  else if (norm <= 5.0) step = 5.0 * mag;
  else step = 10.0 * mag;

  std::vector<double> ticks;
  double t = std::ceil(lo / step - 1e-9) * step;
  while (t <= hi + 1e-9 * step) {
    // Snap near-zero rounding residue so labels read "0", not "1e-17".
    ticks.push_back(std::abs(t) < step * 1e-6 ? 0.0 : t);
    t += step;
  }
  return ticks;
}

}  // namespace

std::string render_svg(const PlotSpec& spec) {
  if (spec.series.empty()) {
    raise(ErrorCode::kEmptySeries, "plot has no series");
  }
  for (const PlotSeries& s : spec.series) {
    if (s.curve.points.empty()) {
      raise(ErrorCode::kEmptySeries,
            "series '" + s.label + "' has no points");
    }
  }
  if (spec.width_px == 0 || spec.height_px == 0) {
    raise(ErrorCode::kInvalidArgument, "plot dimensions must be >= 1 px");
  }
  if (spec.y_range) {
    const auto [lo, hi] = *spec.y_range;
    if (!(lo < hi) || lo < 0.0 || hi > 1.0) {
      raise(ErrorCode::kInvalidArgument,
            "y_range must satisfy 0 <= lo < hi <= 1");
    }
  }

  const bool log_x = spec.x_scale == PlotSpec::XScale::kLog10;
  double x_min = spec.series[0].curve.points[0].x;
  double x_max = x_min;
  for (const PlotSeries& s : spec.series) {
    for (const CurvePoint& p : s.curve.points) {
      if (log_x && p.x <= 0.0) {
        raise(ErrorCode::kNonPositiveXOnLogScale,
              "series '" + s.label + "' has x=" + tick_label(p.x) +
                  " on a log10 axis");
      }
      x_min = std::min(x_min, p.x);
      x_max = std::max(x_max, p.x);
    }
  }

  Frame f;
  f.log_x = log_x;
  if (log_x) {
    double lo_exp = std::floor(std::log10(x_min));
    double hi_exp = std::ceil(std::log10(x_max));
    if (lo_exp == hi_exp) hi_exp += 1.0;
    f.x0 = std::pow(10.0, lo_exp);
    f.x1 = std::pow(10.0, hi_exp);
  } else {
    f.x0 = x_min;
    f.x1 = x_max;
    if (f.x0 == f.x1) {
      f.x0 -= 0.5;
      f.x1 += 0.5;
    }
  }
  f.y0 = spec.y_range ? spec.y_range->first : 0.0;
  f.y1 = spec.y_range ? spec.y_range->second : 1.0;
  f.px0 = kMarginLeft;
  f.px1 = static_cast<double>(spec.width_px) - kMarginRight;
  f.py0 = kMarginTop;
  f.py1 = static_cast<double>(spec.height_px) - kMarginBottom;

  std::size_t clipped = 0;
  for (const PlotSeries& s : spec.series) {
    for (const CurvePoint& p : s.curve.points) {
      if (p.y < f.y0 || p.y > f.y1) ++clipped;
    }
  }

  const Curve& lead = spec.series[0].curve;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      << "width=\"" << spec.width_px << "\" height=\"" << spec.height_px
      << "\" viewBox=\"0 0 " << spec.width_px << " " << spec.height_px
      << "\">\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << spec.width_px << "\" height=\""
      << spec.height_px << "\" fill=\"#ffffff\"/>\n";
  svg << "<clipPath id=\"plot-area\"><rect x=\"" << px(f.px0) << "\" y=\""
      << px(f.py0) << "\" width=\"" << px(f.px1 - f.px0) << "\" height=\""
      << px(f.py1 - f.py0) << "\"/></clipPath>\n";

  if (!spec.title.empty()) {
    svg << "<text x=\"" << px((f.px0 + f.px1) / 2.0)
        << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"16\">"
        << escape_xml(spec.title) << "</text>\n";
  }

  // Axis frame.
  svg << "<rect x=\"" << px(f.px0) << "\" y=\"" << px(f.py0) << "\" width=\""
      << px(f.px1 - f.px0) << "\" height=\"" << px(f.py1 - f.py0)
      << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"/>\n";

  // X ticks: decades on log axes, integer ranks for CMC data, nice steps
  // otherwise.
  std::vector<double> x_ticks;
  if (log_x) {
    for (double e = std::log10(f.x0); e <= std::log10(f.x1) + 1e-9; e += 1.0) {
      x_ticks.push_back(std::pow(10.0, e));
    }
  } else if (lead.kind == CurveKind::kCmc) {
    const double max_rank = f.x1;
    const double step = std::max(1.0, std::ceil((max_rank - 1.0) / 8.0));
    for (double r = 1.0; r <= max_rank + 1e-9; r += step) {
      x_ticks.push_back(r);
    }
  } else {
    x_ticks = linear_ticks(f.x0, f.x1);
  }
  for (double t : x_ticks) {
    const double xp = f.map_x(t);
    svg << "<line x1=\"" << px(xp) << "\" y1=\"" << px(f.py1) << "\" x2=\""
        << px(xp) << "\" y2=\"" << px(f.py1 + 5.0)
        << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    svg << "<text x=\"" << px(xp) << "\" y=\"" << px(f.py1 + 20.0)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"11\">"
        << tick_label(t) << "</text>\n";
  }

  for (double t : linear_ticks(f.y0, f.y1)) {
    const double yp = f.map_y(t);
    svg << "<line x1=\"" << px(f.px0 - 5.0) << "\" y1=\"" << px(yp)
        << "\" x2=\"" << px(f.px0) << "\" y2=\"" << px(yp)
        << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    svg << "<text x=\"" << px(f.px0 - 8.0) << "\" y=\"" << px(yp + 4.0)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"11\">"
        << tick_label(t) << "</text>\n";
  }

  // Axis titles come from the curve's own axis semantics.
  svg << "<text x=\"" << px((f.px0 + f.px1) / 2.0) << "\" y=\""
      << px(f.py1 + 40.0)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\">"
      << escape_xml(lead.x_axis) << "</text>\n";
  svg << "<text x=\"18\" y=\"" << px((f.py0 + f.py1) / 2.0)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"13\" transform=\"rotate(-90 18 "
      << px((f.py0 + f.py1) / 2.0) << ")\">" << escape_xml(lead.y_axis)
      << "</text>\n";

  for (std::size_t i = 0; i < spec.series.size(); ++i) {
    const PlotSeries& s = spec.series[i];
    const char* color = kPalette[i % kPaletteSize];
    svg << "<polyline clip-path=\"url(#plot-area)\" fill=\"none\" stroke=\""
        << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t k = 0; k < s.curve.points.size(); ++k) {
      if (k > 0) svg << " ";
      svg << px(f.map_x(s.curve.points[k].x)) << ","
          << px(f.map_y(s.curve.points[k].y));
    }
    svg << "\"/>\n";
  }

  // Legend, input order, top-right of the plot area.
  for (std::size_t i = 0; i < spec.series.size(); ++i) {
    const double ly = f.py0 + 16.0 + 16.0 * static_cast<double>(i);
    const char* color = kPalette[i % kPaletteSize];
    svg << "<line x1=\"" << px(f.px1 - 150.0) << "\" y1=\"" << px(ly)
        << "\" x2=\"" << px(f.px1 - 126.0) << "\" y2=\"" << px(ly)
        << "\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n";
    svg << "<text x=\"" << px(f.px1 - 120.0) << "\" y=\"" << px(ly + 4.0)
        << "\" font-family=\"sans-serif\" font-size=\"11\">"
        << escape_xml(spec.series[i].label) << "</text>\n";
  }

  if (clipped > 0) {
    svg << "<text class=\"warning\" x=\"" << px(f.px1) << "\" y=\""
        << px(f.py0 - 6.0)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"11\" fill=\"#d62728\">warning: "
        << clipped << " point" << (clipped == 1 ? "" : "s")
        << " outside y range</text>\n";
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace biomeval
