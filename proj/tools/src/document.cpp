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

#include "delzant_cli/document.hpp"

#include <fstream>
#include <sstream>

#include "toric/error.hpp"

namespace delzant_cli {

using toric::Error;
using toric::ErrorCode;
using toric::Int;
using toric::Rat;

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::ParseError, field + ": " + what);
}

const json& member(const json& j, const std::string& key, const std::string& field) {
  if (!j.is_object()) fail(field, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(field, "missing field \"" + key + "\"");
  return *it;
}

Rat parse_rat(const json& j, const std::string& field) {
  if (j.is_string()) {
    try {
      return toric::parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      fail(field, e.what());
    }
  }
  if (j.is_number_integer()) return Rat(j.get<long long>());
  fail(field, "expected a rational string such as \"1/3\"");
}

Int parse_int(const json& j, const std::string& field) {
  const Rat r = parse_rat(j, field);
  if (!toric::is_integer(r)) fail(field, "expected an integer");
  return toric::num(r);
}

std::int64_t parse_i64(const json& j, const std::string& field) {
  if (!j.is_number_integer()) fail(field, "expected an integer");
  return j.get<std::int64_t>();
}

double parse_double(const json& j, const std::string& field) {
  if (!j.is_number()) fail(field, "expected a number");
  return j.get<double>();
}

toric::Point parse_point(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2) fail(field, "expected a coordinate pair");
  return {parse_rat(j[0], field + "[0]"), parse_rat(j[1], field + "[1]")};
}

json point_json(const toric::Point& p) {
  return json::array({toric::to_string(p.x), toric::to_string(p.y)});
}

std::string rat(const Rat& r) { return toric::to_string(r); }

json move_json(const toric::Move& move) {
  json j;
  j["type"] = toric::move_name(move);
  j["reversed"] = move.reversed;
  std::visit(
      [&j](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, toric::Translate>) {
          j["from"] = to_json(m.from.polygon());
          j["offset"] = point_json(m.offset);
        } else if constexpr (std::is_same_v<T, toric::Scale>) {
          j["from"] = to_json(m.from.polygon());
          j["start"] = rat(m.start);
          j["end"] = rat(m.end);
        } else if constexpr (std::is_same_v<T, toric::EdgeSlide>) {
          j["from"] = to_json(m.from.polygon());
          j["edge"] = m.edge;
          j["start"] = rat(m.start);
          j["end"] = rat(m.end);
        } else if constexpr (std::is_same_v<T, toric::ChopHomotopy>) {
          j["from"] = to_json(m.from.polygon());
          j["vertex"] = point_json(m.vertex);
          j["epsilon"] = rat(m.epsilon);
        } else if constexpr (std::is_same_v<T, toric::HirzebruchInterpolation>) {
          j["a0"] = rat(m.a0);
          j["b0"] = rat(m.b0);
          j["a1"] = rat(m.a1);
          j["b1"] = rat(m.b1);
          j["k"] = m.k;
        } else if constexpr (std::is_same_v<T, toric::HirzebruchStep>) {
          j["a"] = rat(m.a);
          j["b"] = rat(m.b);
          j["k"] = m.k;
        } else {
          j["lambda"] = rat(m.lambda);
        }
      },
      move.kind);
  return j;
}

toric::DelzantPolygon delzant_member(const json& j, const std::string& key,
                                     const std::string& field) {
  const PolygonDocument doc = polygon_from_json(member(j, key, field));
  if (!doc.is_rational()) fail(field + "." + key, "expected a rational polygon");
  return toric::DelzantPolygon::certify(std::get<toric::Polygon>(doc.polygon));
}

toric::Move parse_move(const json& j, const std::string& field) {
  const json& type = member(j, "type", field);
  if (!type.is_string()) fail(field + ".type", "expected a string");
  const std::string t = type.get<std::string>();
  const auto r = [&](const char* key) {
    return parse_rat(member(j, key, field), field + "." + key);
  };
  const auto k = [&] { return parse_i64(member(j, "k", field), field + ".k"); };
  using Kind = decltype(toric::Move::kind);
  const auto kind = [&]() -> Kind {
  if (t == "Translate") {
    return toric::Translate{delzant_member(j, "from", field),
                                 parse_point(member(j, "offset", field), field + ".offset")};
  } else if (t == "Scale") {
    return toric::Scale{delzant_member(j, "from", field), r("start"), r("end")};
  } else if (t == "EdgeSlide") {
    return toric::EdgeSlide{
        delzant_member(j, "from", field),
        static_cast<std::size_t>(parse_i64(member(j, "edge", field), field + ".edge")),
        r("start"), r("end")};
  } else if (t == "ChopHomotopy") {
    return toric::ChopHomotopy{
        delzant_member(j, "from", field),
        parse_point(member(j, "vertex", field), field + ".vertex"), r("epsilon")};
  } else if (t == "HirzebruchInterpolation") {
    return toric::HirzebruchInterpolation{r("a0"), r("b0"), r("a1"), r("b1"), k()};
  } else if (t == "HirzebruchStep") {
    return toric::HirzebruchStep{r("a"), r("b"), k()};
  } else if (t == "SquareToTriangle") {
    return toric::SquareToTriangle{r("lambda")};
  } else {
    fail(field + ".type", "unknown move \"" + t + "\"");
  }
  };
  toric::Move move{kind(), false};
  if (const auto it = j.find("reversed"); it != j.end()) {
    if (!it->is_boolean()) fail(field + ".reversed", "expected a boolean");
    move.reversed = it->get<bool>();
  }
  return move;
}

toric::LatticeAffineMap parse_map(const json& j, const std::string& field) {
  const json& m = member(j, "matrix", field);
  if (!m.is_array() || m.size() != 2 || !m[0].is_array() || !m[1].is_array() ||
      m[0].size() != 2 || m[1].size() != 2) {
    fail(field + ".matrix", "expected a 2x2 array");
  }
  const std::string f = field + ".matrix";
  return toric::LatticeAffineMap::make(
      parse_int(m[0][0], f), parse_int(m[0][1], f), parse_int(m[1][0], f),
      parse_int(m[1][1], f),
      parse_point(member(j, "translation", field), field + ".translation"));
}

void check_version(const json& j, const std::string& field) {
  if (const auto it = j.find("format_version"); it != j.end()) {
    if (!it->is_number_integer() || it->get<long long>() != kFormatVersion) {
      fail(field + ".format_version", "unsupported version (expected 1)");
    }
  }
}

json parse_json_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace

PolygonDocument polygon_from_json(const json& j) {
  const std::string root = "document";
  if (!j.is_object()) fail(root, "expected an object");
  check_version(j, root);
  std::string kind = "rational";
  if (const auto it = j.find("kind"); it != j.end()) {
    if (!it->is_string()) fail("kind", "expected \"rational\" or \"float\"");
    kind = it->get<std::string>();
  }
  if (kind != "rational" && kind != "float") {
    fail("kind", "expected \"rational\" or \"float\", got \"" + kind + "\"");
  }
  std::optional<std::string> name;
  if (const auto it = j.find("name"); it != j.end()) {
    if (!it->is_string()) fail("name", "expected a string");
    name = it->get<std::string>();
  }
  const json& vertices = member(j, "vertices", root);
  if (!vertices.is_array()) fail("vertices", "expected an array");
  if (kind == "rational") {
    std::vector<toric::Point> points;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      points.push_back(parse_point(vertices[i], "vertices[" + std::to_string(i) + "]"));
    }
    return {name, toric::Polygon::from_vertices(std::move(points))};
  } else {
    std::vector<toric::FloatPoint> points;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      const std::string f = "vertices[" + std::to_string(i) + "]";
      const json& v = vertices[i];
      if (!v.is_array() || v.size() != 2) fail(f, "expected a coordinate pair");
      points.push_back({parse_double(v[0], f + "[0]"), parse_double(v[1], f + "[1]")});
    }
    return {name, toric::FloatPolygon::from_vertices(std::move(points))};
  }
}

PolygonDocument parse_polygon(std::string_view text) {
  return polygon_from_json(parse_json_text(text));
}

json to_json(const toric::Polygon& p, const std::optional<std::string>& name) {
  json j;
  j["format_version"] = kFormatVersion;
  j["kind"] = "rational";
  if (name) j["name"] = *name;
  j["vertices"] = json::array();
  for (const toric::Point& v : p.vertices()) j["vertices"].push_back(point_json(v));
  return j;
}

json to_json(const toric::FloatPolygon& p, const std::optional<std::string>& name) {
  json j;
  j["format_version"] = kFormatVersion;
  j["kind"] = "float";
  if (name) j["name"] = *name;
  j["vertices"] = json::array();
  for (const toric::FloatPoint& v : p.vertices()) {
    j["vertices"].push_back(json::array({v.x, v.y}));
  }
  return j;
}

json to_json(const PolygonDocument& doc) {
  return std::visit([&](const auto& p) { return to_json(p, doc.name); }, doc.polygon);
}

std::string serialize(const PolygonDocument& doc) { return to_json(doc).dump(2) + "\n"; }

json to_json(const toric::LatticeAffineMap& m) {
  return {{"matrix",
           json::array({json::array({m.a11.str(), m.a12.str()}),
                        json::array({m.a21.str(), m.a22.str()})})},
          {"translation", point_json(m.c)}};
}

json to_json(const toric::Path& path) {
  json j;
  j["format_version"] = kFormatVersion;
  j["source"] = to_json(path.source.polygon());
  j["target"] = to_json(path.target.polygon());
  if (path.source_witness) j["source_witness"] = to_json(*path.source_witness);
  if (path.target_witness) j["target_witness"] = to_json(*path.target_witness);
  j["moves"] = json::array();
  for (const toric::Move& m : path.moves) j["moves"].push_back(move_json(m));
  return j;
}

toric::Path path_from_json(const json& j) {
  if (!j.is_object()) fail("document", "expected an object");
  check_version(j, "document");
  toric::Path path{{},
                   delzant_member(j, "source", "document"),
                   delzant_member(j, "target", "document"),
                   std::nullopt,
                   std::nullopt};
  if (const auto it = j.find("source_witness"); it != j.end()) {
    path.source_witness = parse_map(*it, "source_witness");
  }
  if (const auto it = j.find("target_witness"); it != j.end()) {
    path.target_witness = parse_map(*it, "target_witness");
  }
  const json& moves = member(j, "moves", "document");
  if (!moves.is_array()) fail("moves", "expected an array");
  for (std::size_t i = 0; i < moves.size(); ++i) {
    path.moves.push_back(parse_move(moves[i], "moves[" + std::to_string(i) + "]"));
  }
  return path;
}

toric::Path parse_path(std::string_view text) { return path_from_json(parse_json_text(text)); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << contents;
}

}  // namespace delzant_cli
