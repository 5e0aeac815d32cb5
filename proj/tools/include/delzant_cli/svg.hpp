// Copyright 2026 The Toric Moduli Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Static SVG snapshots of polygons and path samples.

#pragma once

#include <string>
#include <vector>

#include "toric/float_geometry.hpp"

namespace delzant_cli {

struct SvgLayer {
  toric::FloatPolygon polygon;
  std::string fill = "#4c78a8";
  double opacity = 0.35;
  /// Marks vertices with small dots.
  bool vertices = true;
};

/// One SVG document with all layers in a common frame, y pointing up.
std::string render_svg(const std::vector<SvgLayer>& layers, int width = 480);

}  // namespace delzant_cli
