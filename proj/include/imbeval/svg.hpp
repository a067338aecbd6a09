// Copyright 2026 The imbeval authors
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

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "imbeval/curve.hpp"

namespace imbeval {

struct SvgOptions {
  int width = 800;
  int height = 600;
  bool log_x = false;
};

namespace detail {

inline std::string svg_num(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2f", value);
  return buffer;
}

inline const char* svg_x_label(CurveKind kind) {
  switch (kind) {
    case CurveKind::roc:
    case CurveKind::det:
      return "false positive rate";
    case CurveKind::pr:
      return "recall";
    case CurveKind::adjusted_precision:
      return "deployment prior p_real";
  }
  return "x";
}

inline const char* svg_y_label(CurveKind kind) {
  switch (kind) {
    case CurveKind::roc:
      return "true positive rate";
    case CurveKind::det:
      return "false rejection rate";
    case CurveKind::pr:
      return "precision";
    case CurveKind::adjusted_precision:
      return "adjusted precision";
  }
  return "y";
}

}  // namespace detail

/// Self-contained static line chart: axes, ticks, one polyline. No
/// timestamps or external references, so output is byte-stable.
inline void write_curve_svg(std::ostream& os, const Curve& curve,
                            const SvgOptions& options = {}) {
  const double left = 70.0;
  const double right = 24.0;
  const double top = 24.0;
  const double bottom = 56.0;
  const double plot_w = options.width - left - right;
  const double plot_h = options.height - top - bottom;

  // x domain: [0,1] linear, or decade-aligned log bounds from the data.
  int lo_exp = 0;
  int hi_exp = 0;
  if (options.log_x) {
    double min_pos = 1.0;
    double max_x = 0.0;
    for (const CurvePoint& p : curve.points) {
      if (p.x > 0.0) min_pos = std::min(min_pos, p.x);
      max_x = std::max(max_x, p.x);
    }
    if (max_x <= 0.0) max_x = 1.0;
    lo_exp = static_cast<int>(std::floor(std::log10(min_pos)));
    hi_exp = static_cast<int>(std::ceil(std::log10(max_x) - 1e-9));
    if (hi_exp <= lo_exp) hi_exp = lo_exp + 1;
  }

  const auto map_x = [&](double v) {
    if (!options.log_x) return left + v * plot_w;
    const double lo = static_cast<double>(lo_exp);
    const double hi = static_cast<double>(hi_exp);
    const double clamped =
        std::min(std::pow(10.0, hi), std::max(std::pow(10.0, lo), v));
    return left + (std::log10(clamped) - lo) / (hi - lo) * plot_w;
  };
  const auto map_y = [&](double v) { return top + (1.0 - v) * plot_h; };

  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.width
     << "\" height=\"" << options.height << "\" viewBox=\"0 0 "
     << options.width << ' ' << options.height << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << options.width << "\" height=\""
     << options.height << "\" fill=\"white\"/>\n";

  // y gridlines and ticks at 0, 0.2, ..., 1.
  for (int i = 0; i <= 5; ++i) {
    const double v = i / 5.0;
    const double y = map_y(v);
    os << "<line x1=\"" << detail::svg_num(left) << "\" y1=\""
       << detail::svg_num(y) << "\" x2=\"" << detail::svg_num(left + plot_w)
       << "\" y2=\"" << detail::svg_num(y)
       << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    char label[16];
    std::snprintf(label, sizeof(label), "%.1f", v);
    os << "<text x=\"" << detail::svg_num(left - 8.0) << "\" y=\""
       << detail::svg_num(y + 4.0)
       << "\" font-family=\"sans-serif\" font-size=\"12\" "
          "text-anchor=\"end\">"
       << label << "</text>\n";
  }

  // x gridlines and ticks: decades when logarithmic, fifths otherwise.
  if (options.log_x) {
    for (int e = lo_exp; e <= hi_exp; ++e) {
      const double x = map_x(std::pow(10.0, e));
      os << "<line x1=\"" << detail::svg_num(x) << "\" y1=\""
         << detail::svg_num(top) << "\" x2=\"" << detail::svg_num(x)
         << "\" y2=\"" << detail::svg_num(top + plot_h)
         << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
      char label[16];
      if (e == 0) {
        std::snprintf(label, sizeof(label), "1");
      } else {
        std::snprintf(label, sizeof(label), "1e%d", e);
      }
      os << "<text x=\"" << detail::svg_num(x) << "\" y=\""
         << detail::svg_num(top + plot_h + 18.0)
         << "\" font-family=\"sans-serif\" font-size=\"12\" "
            "text-anchor=\"middle\">"
         << label << "</text>\n";
    }
  } else {
    for (int i = 0; i <= 5; ++i) {
      const double v = i / 5.0;
      const double x = map_x(v);
      os << "<line x1=\"" << detail::svg_num(x) << "\" y1=\""
         << detail::svg_num(top) << "\" x2=\"" << detail::svg_num(x)
         << "\" y2=\"" << detail::svg_num(top + plot_h)
         << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
      char label[16];
      std::snprintf(label, sizeof(label), "%.1f", v);
      os << "<text x=\"" << detail::svg_num(x) << "\" y=\""
         << detail::svg_num(top + plot_h + 18.0)
         << "\" font-family=\"sans-serif\" font-size=\"12\" "
            "text-anchor=\"middle\">"
         << label << "</text>\n";
    }
  }

  // axes
  os << "<line x1=\"" << detail::svg_num(left) << "\" y1=\""
     << detail::svg_num(top) << "\" x2=\"" << detail::svg_num(left)
     << "\" y2=\"" << detail::svg_num(top + plot_h)
     << "\" stroke=\"#333333\" stroke-width=\"1.5\"/>\n";
  os << "<line x1=\"" << detail::svg_num(left) << "\" y1=\""
     << detail::svg_num(top + plot_h) << "\" x2=\""
     << detail::svg_num(left + plot_w) << "\" y2=\""
     << detail::svg_num(top + plot_h)
     << "\" stroke=\"#333333\" stroke-width=\"1.5\"/>\n";

  // curve
  os << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" "
        "points=\"";
  for (std::size_t i = 0; i < curve.points.size(); ++i) {
    if (i != 0) os << ' ';
    os << detail::svg_num(map_x(curve.points[i].x)) << ','
       << detail::svg_num(map_y(curve.points[i].y));
  }
  os << "\"/>\n";

  // labels and title
  os << "<text x=\"" << detail::svg_num(left + plot_w / 2.0) << "\" y=\""
     << detail::svg_num(top + plot_h + 40.0)
     << "\" font-family=\"sans-serif\" font-size=\"14\" "
        "text-anchor=\"middle\">"
     << detail::svg_x_label(curve.kind) << "</text>\n";
  os << "<text x=\"18\" y=\"" << detail::svg_num(top + plot_h / 2.0)
     << "\" font-family=\"sans-serif\" font-size=\"14\" "
        "text-anchor=\"middle\" transform=\"rotate(-90 18 "
     << detail::svg_num(top + plot_h / 2.0) << ")\">"
     << detail::svg_y_label(curve.kind) << "</text>\n";
  os << "<text x=\"" << detail::svg_num(left + plot_w / 2.0)
     << "\" y=\"16\" font-family=\"sans-serif\" font-size=\"14\" "
        "text-anchor=\"middle\">"
     << curve_kind_name(curve.kind) << "</text>\n";
  os << "</svg>\n";
}

}  // namespace imbeval
