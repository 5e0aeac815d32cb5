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

// Exact planar geometry over the rationals: convex polygons, half-planes,
// lattice affine maps, and the measures built from them.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "toric/rational.hpp"

namespace toric {

struct Vec2 {
  Rat x;
  Rat y;

  friend Vec2 operator+(const Vec2& a, const Vec2& b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) {
    return {a.x - b.x, a.y - b.y};
  }
  friend Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
  friend Vec2 operator*(const Rat& s, const Vec2& v) {
    return {s * v.x, s * v.y};
  }
  friend bool operator==(const Vec2& a, const Vec2& b) {
    return a.x == b.x && a.y == b.y;
  }
  /// Lexicographic: x first, then y.
  friend bool operator<(const Vec2& a, const Vec2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

using Point = Vec2;

inline Rat dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline Rat cross(const Vec2& a, const Vec2& b) {
  return a.x * b.y - a.y * b.x;
}

/// Integer lattice vector.
struct IVec {
  Int x;
  Int y;

  Vec2 to_rat() const { return {Rat(x), Rat(y)}; }

  friend IVec operator-(const IVec& a) { return {-a.x, -a.y}; }
  friend bool operator==(const IVec& a, const IVec& b) {
    return a.x == b.x && a.y == b.y;
  }
};

inline Int cross(const IVec& a, const IVec& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const IVec& n, const Vec2& p) { return Rat(n.x) * p.x + Rat(n.y) * p.y; }

bool is_lattice_point(const Vec2& v);

/// Splits a non-zero integer vector as `v = multiplicity * direction` with
/// `direction` primitive. Throws ZeroVector.
struct PrimitiveSplit {
  IVec direction;
  Int multiplicity;
};
PrimitiveSplit primitive(const IVec& v);

/// Primitive integer vector pointing along a non-zero rational vector.
IVec primitive_direction(const Vec2& v);

/// Strictly convex polygon with rational vertices, stored counterclockwise
/// starting from its lexicographically smallest vertex. Two polygons are equal
/// as sets exactly when their vertex lists are equal.
class Polygon {
 public:
  /// Accepts either orientation. Throws InvariantViolation naming the first
  /// offending vertex (in input order) for repeated vertices, collinear
  /// triples, reflex or self-intersecting cycles, or fewer than three points.
  static Polygon from_vertices(std::vector<Point> vertices);

  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }

  /// Cyclic access: any integer index is reduced modulo size().
  const Point& vertex(std::ptrdiff_t i) const;
  /// Edge `i` runs from vertex(i) to vertex(i + 1).
  Vec2 edge(std::ptrdiff_t i) const;

  /// Index of the vertex equal to `p`, if any.
  std::optional<std::size_t> find_vertex(const Point& p) const;

  friend bool operator==(const Polygon&, const Polygon&) = default;

 private:
  explicit Polygon(std::vector<Point> normalized)
      : vertices_(std::move(normalized)) {}
  friend std::optional<Polygon> polygon_from_cycle(std::vector<Point> cycle);

  std::vector<Point> vertices_;
};

/// Builds a polygon from a convex counterclockwise cycle that may contain
/// repeated or collinear points; those are removed. Returns nullopt when the
/// cleaned cycle has zero area.
std::optional<Polygon> polygon_from_cycle(std::vector<Point> cycle);

/// Closed half-plane { x : <normal, x> >= offset } with primitive normal.
struct HalfPlane {
  IVec normal;
  Rat offset;

  Rat evaluate(const Point& p) const { return dot(normal, p) - offset; }
  bool contains(const Point& p) const { return evaluate(p) >= 0; }

  friend bool operator==(const HalfPlane& a, const HalfPlane& b) {
    return a.normal == b.normal && a.offset == b.offset;
  }
};

/// Half-plane whose normal is the primitive multiple of `normal`, holding
/// exactly the points with <normal, x> >= <normal, through>.
HalfPlane half_plane_through(const IVec& normal, const Point& through);

/// Axis aligned closed rectangle [x_min, x_max] x [y_min, y_max].
struct Rect {
  Rat x_min;
  Rat x_max;
  Rat y_min;
  Rat y_max;
};

/// Element x -> A x + c of AGL(2, Z).
struct LatticeAffineMap {
  Int a11 = 1, a12 = 0, a21 = 0, a22 = 1;
  Vec2 c{Rat(0), Rat(0)};

  /// Throws NotUnimodular unless det A = +-1.
  static LatticeAffineMap make(Int a11, Int a12, Int a21, Int a22, Vec2 c);
  static LatticeAffineMap identity() { return {}; }

  Int det() const { return a11 * a22 - a12 * a21; }
  Point apply(const Point& p) const;
  Vec2 apply_linear(const Vec2& v) const;
  IVec apply_linear(const IVec& v) const;
  LatticeAffineMap inverse() const;

  friend bool operator==(const LatticeAffineMap& a, const LatticeAffineMap& b) {
    return a.a11 == b.a11 && a.a12 == b.a12 && a.a21 == b.a21 &&
           a.a22 == b.a22 && a.c == b.c;
  }
};

/// (outer o inner)(x) = outer(inner(x)).
LatticeAffineMap compose(const LatticeAffineMap& outer,
                         const LatticeAffineMap& inner);

/// Throws DegenerateHull when the points do not span the plane.
Polygon convex_hull(std::span<const Point> points);

Rat area(const Polygon& p);

/// Inside or on the boundary.
bool contains(const Polygon& p, const Point& q);

/// Every vertex of `inner` lies in `outer`.
bool contains(const Polygon& outer, const Polygon& inner);

std::optional<Polygon> clip(const Polygon& p, const HalfPlane& h);
std::optional<Polygon> intersect(const Polygon& p, const Polygon& q);

/// Area of the symmetric difference.
Rat sym_diff_distance(const Polygon& p, const Polygon& q);

/// Area of p inside the rectangle (the Duistermaat-Heckman measure of r when
/// p is a momentum polygon).
Rat dh_measure(const Polygon& p, const Rect& r);

Polygon apply_map(const LatticeAffineMap& m, const Polygon& p);

/// One inward half-plane per edge, in edge order; intersecting them gives p.
std::vector<HalfPlane> h_rep(const Polygon& p);

Polygon translate(const Polygon& p, const Vec2& offset);
/// Homothety about the origin, factor > 0.
Polygon scale(const Polygon& p, const Rat& factor);

}  // namespace toric
