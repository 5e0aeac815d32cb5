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

#include "delzant_cli/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "toric/error.hpp"

namespace delzant_cli {

namespace {

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

std::string render_svg(const std::vector<SvgLayer>& layers, int width) {
  if (layers.empty()) {
    throw toric::Error(toric::ErrorCode::ParameterOutOfRange, "nothing to render");
  }
  toric::FloatBox box = layers.front().polygon.bounding_box();
  for (const SvgLayer& l : layers) box = toric::union_box(box, l.polygon.bounding_box());
  const double span = std::max(box.x_max - box.x_min, box.y_max - box.y_min);
  const double margin = 0.05 * span;
  const double scale = width / (span + 2 * margin);
  const double w = (box.x_max - box.x_min + 2 * margin) * scale;
  const double h = (box.y_max - box.y_min + 2 * margin) * scale;
  const auto sx = [&](double x) { return (x - box.x_min + margin) * scale; };
  const auto sy = [&](double y) { return (box.y_max + margin - y) * scale; };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(w)
    << "\" height=\"" << fixed(h) << "\" viewBox=\"0 0 " << fixed(w) << ' '
    << fixed(h) << "\">\n";
  s << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const SvgLayer& l : layers) {
    s << "  <polygon points=\"";
    for (std::size_t i = 0; i < l.polygon.size(); ++i) {
      const toric::FloatPoint& v = l.polygon.vertices()[i];
      s << (i ? " " : "") << fixed(sx(v.x)) << ',' << fixed(sy(v.y));
    }
    s << "\" fill=\"" << l.fill << "\" fill-opacity=\"" << fixed(l.opacity)
      << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    if (l.vertices) {
      for (const toric::FloatPoint& v : l.polygon.vertices()) {
        s << "  <circle cx=\"" << fixed(sx(v.x)) << "\" cy=\"" << fixed(sy(v.y))
          << "\" r=\"2.5\" fill=\"black\"/>\n";
      }
    }
  }
  s << "</svg>\n";
  return s.str();
}

}  // namespace delzant_cli
