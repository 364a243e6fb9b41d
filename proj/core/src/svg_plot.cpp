// Copyright 2026 The slqr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "slqr/svg_plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

namespace slqr {

namespace {

constexpr double kLeft = 80.0;
constexpr double kRight = 180.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 56.0;

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

// Fixed-precision coordinate text keeps files small and stable.
std::string coord(double v) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << v;
  return os.str();
}

std::string tick_label(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  bool valid() const { return lo <= hi; }
  void pad() {
    if (!valid()) {
      lo = 0.0;
      hi = 1.0;
    } else if (hi - lo < 1e-300 * std::max(1.0, std::abs(hi))) {
      const double d = std::max(1.0, std::abs(hi)) * 0.5;
      lo -= d;
      hi += d;
    }
  }
};

}  // namespace

const std::string& palette_color(std::size_t index) {
  static const std::array<std::string, 12> colors = {
      "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
      "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939"};
  return colors[index % colors.size()];
}

std::string render_svg(const PlotSpec& spec) {
  const double w = spec.width;
  const double h = spec.height;
  const double pw = w - kLeft - kRight;
  const double ph = h - kTop - kBottom;

  auto usable = [&](double x, double y) {
    return std::isfinite(x) && std::isfinite(y) && (!spec.log_y || y > 0.0);
  };
  auto ty = [&](double y) { return spec.log_y ? std::log10(y) : y; };

  Range xr;
  Range yr;
  for (const PlotSeries& s : spec.series) {
    const std::size_t count = std::min(s.x.size(), s.y.size());
    for (std::size_t i = 0; i < count; ++i) {
      if (!usable(s.x[i], s.y[i])) continue;
      xr.add(s.x[i]);
      yr.add(ty(s.y[i]));
    }
  }
  if (spec.log_y && yr.valid()) {
    yr.lo = std::floor(yr.lo);
    yr.hi = std::ceil(yr.hi);
    if (yr.hi <= yr.lo) yr.hi = yr.lo + 1.0;
  }
  xr.pad();
  yr.pad();
  auto px = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
  auto py = [&](double y) { return kTop + ph - (ty(y) - yr.lo) / (yr.hi - yr.lo) * ph; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.width
     << "\" height=\"" << spec.height << "\" viewBox=\"0 0 " << spec.width << ' '
     << spec.height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << coord(kLeft + pw / 2) << "\" y=\"22\" text-anchor=\"middle\" "
     << "font-size=\"15\">" << escape(spec.title) << "</text>\n";

  // Grid and ticks.
  os << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
  std::vector<double> yticks;
  if (spec.log_y) {
    for (double e = yr.lo; e <= yr.hi + 1e-9; e += 1.0) yticks.push_back(e);
  } else {
    for (int i = 0; i <= 5; ++i) yticks.push_back(yr.lo + (yr.hi - yr.lo) * i / 5.0);
  }
  std::vector<double> xticks;
  const double xspan = xr.hi - xr.lo;
  const double xstep = std::max(1.0, std::ceil(xspan / 10.0));
  for (double x = std::ceil(xr.lo); x <= xr.hi + 1e-9; x += xstep) xticks.push_back(x);
  for (double t : yticks) {
    const double y = kTop + ph - (t - yr.lo) / (yr.hi - yr.lo) * ph;
    os << "<line x1=\"" << coord(kLeft) << "\" y1=\"" << coord(y) << "\" x2=\""
       << coord(kLeft + pw) << "\" y2=\"" << coord(y) << "\"/>\n";
  }
  for (double t : xticks) {
    os << "<line x1=\"" << coord(px(t)) << "\" y1=\"" << coord(kTop) << "\" x2=\""
       << coord(px(t)) << "\" y2=\"" << coord(kTop + ph) << "\"/>\n";
  }
  os << "</g>\n";
  os << "<rect x=\"" << coord(kLeft) << "\" y=\"" << coord(kTop) << "\" width=\""
     << coord(pw) << "\" height=\"" << coord(ph)
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (double t : yticks) {
    const double y = kTop + ph - (t - yr.lo) / (yr.hi - yr.lo) * ph;
    const std::string label = spec.log_y ? "1e" + tick_label(t) : tick_label(t);
    os << "<text x=\"" << coord(kLeft - 6) << "\" y=\"" << coord(y + 4)
       << "\" text-anchor=\"end\">" << escape(label) << "</text>\n";
  }
  for (double t : xticks) {
    os << "<text x=\"" << coord(px(t)) << "\" y=\"" << coord(kTop + ph + 16)
       << "\" text-anchor=\"middle\">" << tick_label(t) << "</text>\n";
  }
  os << "<text x=\"" << coord(kLeft + pw / 2) << "\" y=\"" << coord(h - 12)
     << "\" text-anchor=\"middle\">" << escape(spec.x_label) << "</text>\n";
  os << "<text transform=\"translate(18 " << coord(kTop + ph / 2)
     << ") rotate(-90)\" text-anchor=\"middle\">" << escape(spec.y_label)
     << "</text>\n";

  // Series.
  for (const PlotSeries& s : spec.series) {
    const std::size_t count = std::min(s.x.size(), s.y.size());
    std::vector<std::vector<std::pair<double, double>>> runs(1);
    for (std::size_t i = 0; i < count; ++i) {
      if (!usable(s.x[i], s.y[i])) {
        if (!runs.back().empty()) runs.emplace_back();
        continue;
      }
      runs.back().emplace_back(px(s.x[i]), py(s.y[i]));
    }
    os << "<g stroke=\"" << s.color << "\" fill=\"" << s.color << "\" opacity=\""
       << coord(s.opacity) << "\">\n";
    for (const auto& run : runs) {
      if (run.size() >= 2) {
        os << "<polyline fill=\"none\" stroke-width=\"" << coord(s.stroke_width) << '"';
        if (s.dashed) os << " stroke-dasharray=\"6 4\"";
        os << " points=\"";
        for (std::size_t i = 0; i < run.size(); ++i) {
          os << (i ? " " : "") << coord(run[i].first) << ',' << coord(run[i].second);
        }
        os << "\"/>\n";
      }
      if (s.markers || run.size() == 1) {
        for (const auto& [x, y] : run) {
          os << "<circle cx=\"" << coord(x) << "\" cy=\"" << coord(y)
             << "\" r=\"2.5\" stroke=\"none\"/>\n";
        }
      }
    }
    os << "</g>\n";
  }

  // Legend.
  double ly = kTop + 8;
  for (const PlotSeries& s : spec.series) {
    if (s.label.empty()) continue;
    os << "<line x1=\"" << coord(kLeft + pw + 12) << "\" y1=\"" << coord(ly)
       << "\" x2=\"" << coord(kLeft + pw + 36) << "\" y2=\"" << coord(ly)
       << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"";
    if (s.dashed) os << " stroke-dasharray=\"6 4\"";
    os << "/>\n";
    os << "<text x=\"" << coord(kLeft + pw + 42) << "\" y=\"" << coord(ly + 4) << "\">"
       << escape(s.label) << "</text>\n";
    ly += 18;
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace slqr
