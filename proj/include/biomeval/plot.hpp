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

// Standalone SVG figures from curves. Rendering is a pure function of the
// spec: fixed decimal formatting and stable element ordering make the
// output byte-reproducible.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "biomeval/types.hpp"

namespace biomeval {

struct PlotSeries {
  std::string label;
  Curve curve;
};

struct PlotSpec {
  enum class XScale { kLinear, kLog10 };

  std::string title;
  XScale x_scale = XScale::kLinear;
  // Fixed y extent within [0, 1]; unset means the full [0, 1] band. Points
  // outside a fixed range are clipped and flagged by a warning element.
  std::optional<std::pair<double, double>> y_range;
  std::vector<PlotSeries> series;
  std::size_t width_px = 640;
  std::size_t height_px = 480;
};

std::string render_svg(const PlotSpec& spec);

}  // namespace biomeval
