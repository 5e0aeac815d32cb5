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

// Moduli-level algorithms on Delzant polygons.
//
// Every Delzant polygon is congruent either to a Delzant triangle or to a
// Hirzebruch trapezoid with a sequence of corner chops applied. canonicalize()
// recovers that description by undoing chops, and connect() joins two
// canonical representatives by an explicit path of Delzant polygons.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "toric/delzant.hpp"
#include "toric/float_geometry.hpp"

namespace toric {

struct TriangleBase {
  Rat lambda;

  friend bool operator==(const TriangleBase&, const TriangleBase&) = default;
};

struct HirzebruchBase {
  Rat a;
  Rat b;
  std::int64_t k = 0;

  friend bool operator==(const HirzebruchBase&, const HirzebruchBase&) = default;
};

using Base = std::variant<TriangleBase, HirzebruchBase>;

/// Standard position polygon of a base: delzant_triangle or hirzebruch.
DelzantPolygon base_polygon(const Base& base);

std::string to_string(const Base& base);

/// A corner chop located by the vertex it removes.
struct ChopStep {
  Point vertex;
  Rat epsilon;

  friend bool operator==(const ChopStep&, const ChopStep&) = default;
};

/// Applies the chops in order; throws if a located vertex is missing.
DelzantPolygon replay(const Base& base, const std::vector<ChopStep>& chops);

struct Unchop {
  DelzantPolygon polygon;
  Rat epsilon;
  /// The restored vertex.
  Point corner;
};

/// Inverse of corner_chop at edge `edge`: extends the two neighbouring edges
/// to their meeting point w. Returns nullopt unless the result is a Delzant
/// polygon and the edge endpoints are w + eps u1 and w + eps u2 for one eps.
std::optional<Unchop> unchop(const DelzantPolygon& p, std::size_t edge);

struct Decomposition {
  /// Sends the input to `representative`.
  LatticeAffineMap witness;
  Base base;
  /// Chops rebuilding `representative` from base_polygon(base).
  std::vector<ChopStep> chops;
  DelzantPolygon representative;
};

/// Undoes chops (smallest size first) down to four edges, recognizes a
/// Hirzebruch trapezoid, and otherwise continues to a Delzant triangle.
/// Throws DecompositionFailed when no unchoppable edge or no base is found.
Decomposition canonicalize(const DelzantPolygon& p);

// Moves. Each is a map [0, 1] -> polygons; `from` is the value at t = 0.

/// from + t * offset.
struct Translate {
  DelzantPolygon from;
  Vec2 offset;
};

/// scale(from, start + t (end - start)); start and end positive.
struct Scale {
  DelzantPolygon from;
  Rat start;
  Rat end;
};

/// edge_slide(from, edge, start + t (end - start)); both in the open slide
/// interval, which is convex, so every offset between is admissible.
struct EdgeSlide {
  DelzantPolygon from;
  std::size_t edge = 0;
  Rat start;
  Rat end;
};

/// Chop of size t * epsilon at `vertex`; t = 0 is `from` itself.
struct ChopHomotopy {
  DelzantPolygon from;
  Point vertex;
  Rat epsilon;
};

/// H(a, b, k) with (a, b) moving linearly; the admissible set is convex.
struct HirzebruchInterpolation {
  Rat a0;
  Rat b0;
  Rat a1;
  Rat b1;
  std::int64_t k = 0;
};

/// H(a, b, k) to H(a, b, k + 1) through the pentagon obtained from either by
/// a chop of size b / 2 at the top right (resp. bottom right) vertex.
/// Requires a > (k + 1) b / 2.
struct HirzebruchStep {
  Rat a;
  Rat b;
  std::int64_t k = 0;
};

/// Chop of size lambda t at the top right vertex of H(lambda, lambda, 0). At
/// t = 1 the top edge is used up and the value is the triangle
/// (0, -lambda/2), (lambda, -lambda/2), (0, lambda/2).
struct SquareToTriangle {
  Rat lambda;
};

struct Move {
  std::variant<Translate, Scale, EdgeSlide, ChopHomotopy,
               HirzebruchInterpolation, HirzebruchStep, SquareToTriangle>
      kind;
  /// Traverse from t = 1 to t = 0.
  bool reversed = false;
};

std::string move_name(const Move& m);

/// Value of a move at t in [0, 1]; throws ParameterOutOfRange otherwise.
Polygon sample(const Move& m, const Rat& t);

struct Path {
  /// Moves share [0, 1] equally, in order.
  std::vector<Move> moves;
  DelzantPolygon source;
  DelzantPolygon target;
  /// Set by connect(): witnesses from the original endpoints to source and
  /// target.
  std::optional<LatticeAffineMap> source_witness;
  std::optional<LatticeAffineMap> target_witness;
};

/// Value of the path at t in [0, 1]; throws ParameterOutOfRange otherwise.
Polygon sample(const Path& path, const Rat& t);

/// Path between the standard position polygons of two bases.
Path base_path(const Base& from, const Base& to);

/// Path between the canonical representatives of p and q.
Path connect(const DelzantPolygon& p, const DelzantPolygon& q);

/// max_i d(sample(i / n), sample((i + 1) / n)). Requires n >= 2.
Rat continuity_modulus(const Path& path, std::size_t n);

/// H(c / n + b k / 2, b, k), a Cauchy sequence in n without Delzant limit.
/// Rejects k == 1 and inadmissible terms with ConstraintViolation.
DelzantPolygon cauchy_sequence(const Rat& c, const Rat& b, std::int64_t k,
                               std::int64_t n);

/// Vertex-wise limit of cauchy_sequence: the triangle (0, -b/2), (b k, -b/2),
/// (0, b/2), whose vertex (0, b/2) has defect k.
Polygon cauchy_limit(const Rat& b, std::int64_t k);

/// Unit square H(1, 1, 0) with its top right corner cut by a segment of
/// irrational slope -1/sqrt(2), removing delta = eps (2 + sqrt 2) / 4 of the
/// top edge. Convex but not Delzant. Requires 0 < eps < 1.
FloatPolygon q_delta(double eps);

}  // namespace toric
