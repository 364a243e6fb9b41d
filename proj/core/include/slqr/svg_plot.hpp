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

#pragma once

#include <string>
#include <vector>

namespace slqr {

struct PlotSeries {
  std::string label;  // empty: not listed in the legend
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "#1f77b4";
  double stroke_width = 1.5;
  double opacity = 1.0;
  bool dashed = false;
  bool markers = true;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_y = false;
  int width = 760;
  int height = 460;
  std::vector<PlotSeries> series;
};

/// Standalone SVG line chart. Points that are not finite, or not positive on
/// a log axis, are dropped and split the polyline.
std::string render_svg(const PlotSpec& spec);

/// Distinct colors cycled by index.
const std::string& palette_color(std::size_t index);

}  // namespace slqr
