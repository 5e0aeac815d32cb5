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

// JSON documents read and written by the delzant tool.
//
// A polygon document looks like
//
//   {"format_version": 1, "kind": "rational", "name": "triangle",
//    "vertices": [["0", "0"], ["1", "0"], ["0", "1"]]}
//
// Rational coordinates are strings "p/q" or "p" (integers may also be JSON
// integers); float coordinates are JSON numbers. A path document holds
// "source", "target" and a list of tagged "moves".

#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "toric/float_geometry.hpp"
#include "toric/geometry.hpp"
#include "toric/moduli.hpp"

namespace delzant_cli {

using json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

struct PolygonDocument {
  std::optional<std::string> name;
  std::variant<toric::Polygon, toric::FloatPolygon> polygon;

  bool is_rational() const {
    return std::holds_alternative<toric::Polygon>(polygon);
  }
};

/// Throws toric::Error with ParseError for malformed JSON or fields, and
/// InvariantViolation when the vertices do not form a convex polygon.
PolygonDocument parse_polygon(std::string_view text);
PolygonDocument polygon_from_json(const json& j);

json to_json(const toric::Polygon& p, const std::optional<std::string>& name = {});
json to_json(const toric::FloatPolygon& p,
             const std::optional<std::string>& name = {});
json to_json(const PolygonDocument& doc);

std::string serialize(const PolygonDocument& doc);

json to_json(const toric::Path& path);
toric::Path parse_path(std::string_view text);
toric::Path path_from_json(const json& j);

json to_json(const toric::LatticeAffineMap& m);

/// Reads a whole file; throws toric::Error (ParseError) when unreadable.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace delzant_cli
