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

#include "toric/geometry.hpp"

#include <algorithm>
#include <string>

#include "toric/error.hpp"

namespace toric {

namespace {

int sign(const Rat& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

Rat twice_signed_area(const std::vector<Point>& v) {
  Rat sum = 0;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    sum += cross(v[i], v[(i + 1) % n]);
  }
  return sum;
}

void rotate_to_lex_min(std::vector<Point>& v) {
  const auto it = std::min_element(v.begin(), v.end());
  std::rotate(v.begin(), it, v.end());
}

[[noreturn]] void invariant_violation(const std::string& what, std::size_t i) {
  throw Error(ErrorCode::InvariantViolation,
              what + " at vertex " + std::to_string(i));
}

}  // namespace

bool is_lattice_point(const Vec2& v) { return is_integer(v.x) && is_integer(v.y); }

PrimitiveSplit primitive(const IVec& v) {
  if (v.x == 0 && v.y == 0) {
    throw Error(ErrorCode::ZeroVector, "primitive of the zero vector");
  }
  const Int g = gcd(abs(v.x), abs(v.y));
  return {{v.x / g, v.y / g}, g};
}

IVec primitive_direction(const Vec2& v) {
  if (v.x == 0 && v.y == 0) {
    throw Error(ErrorCode::ZeroVector, "direction of the zero vector");
  }
  const Int l = lcm(den(v.x), den(v.y));
  const IVec scaled{num(v.x) * (l / den(v.x)), num(v.y) * (l / den(v.y))};
  return primitive(scaled).direction;
}

const Point& Polygon::vertex(std::ptrdiff_t i) const {
  const auto n = static_cast<std::ptrdiff_t>(vertices_.size());
  return vertices_[static_cast<std::size_t>(((i % n) + n) % n)];
}

Vec2 Polygon::edge(std::ptrdiff_t i) const { return vertex(i + 1) - vertex(i); }

std::optional<std::size_t> Polygon::find_vertex(const Point& p) const {
  const auto it = std::find(vertices_.begin(), vertices_.end(), p);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

Polygon Polygon::from_vertices(std::vector<Point> v) {
  const std::size_t n = v.size();
  if (n < 3) {
    throw Error(ErrorCode::InvariantViolation,
                "polygon needs at least 3 vertices, got " + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (v[i] == v[j]) invariant_violation("repeated vertex", i);
    }
  }
  const int orientation = sign(twice_signed_area(v));
  if (orientation == 0) {
    throw Error(ErrorCode::InvariantViolation, "polygon has zero area");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Point& prev = v[(i + n - 1) % n];
    const Point& next = v[(i + 1) % n];
    const int turn = sign(cross(v[i] - prev, next - v[i]));
    if (turn == 0) invariant_violation("collinear vertex", i);
    if (turn != orientation) invariant_violation("reflex vertex", i);
  }
  // Uniform turning direction still admits star-shaped cycles winding more
  // than once; a convex cycle changes horizontal direction at most twice.
  int changes = 0;
  int last = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    const int dx = sign(v[(i + 1) % n].x - v[i % n].x);
    if (dx == 0) continue;
    if (last != 0 && dx != last) ++changes;
    last = dx;
  }
  if (changes > 2) {
    throw Error(ErrorCode::InvariantViolation,
                "vertex cycle winds more than once");
  }
  if (orientation < 0) std::reverse(v.begin(), v.end());
  rotate_to_lex_min(v);
  return Polygon(std::move(v));
}

std::optional<Polygon> polygon_from_cycle(std::vector<Point> cycle) {
  // Drop repeated points, then collinear ones, until stable.
  bool changed = true;
  while (changed && cycle.size() >= 3) {
    changed = false;
    std::vector<Point> kept;
    kept.reserve(cycle.size());
    const std::size_t n = cycle.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point& prev = cycle[(i + n - 1) % n];
      const Point& next = cycle[(i + 1) % n];
      if (cycle[i] == next) {
        changed = true;
        continue;
      }
      if (cross(cycle[i] - prev, next - cycle[i]) == 0) {
        changed = true;
        continue;
      }
      kept.push_back(cycle[i]);
    }
    cycle = std::move(kept);
  }
  if (cycle.size() < 3 || twice_signed_area(cycle) <= 0) return std::nullopt;
  rotate_to_lex_min(cycle);
  return Polygon(std::move(cycle));
}

HalfPlane half_plane_through(const IVec& normal, const Point& through) {
  const IVec n = primitive(normal).direction;
  return {n, dot(n, through)};
}

LatticeAffineMap LatticeAffineMap::make(Int a11, Int a12, Int a21, Int a22,
                                        Vec2 c) {
  LatticeAffineMap m{std::move(a11), std::move(a12), std::move(a21),
                     std::move(a22), std::move(c)};
  const Int d = m.det();
  if (d != 1 && d != -1) {
    throw Error(ErrorCode::NotUnimodular,
                "determinant " + d.str() + " is not +-1");
  }
  return m;
}

Vec2 LatticeAffineMap::apply_linear(const Vec2& v) const {
  return {Rat(a11) * v.x + Rat(a12) * v.y, Rat(a21) * v.x + Rat(a22) * v.y};
}

IVec LatticeAffineMap::apply_linear(const IVec& v) const {
  return {a11 * v.x + a12 * v.y, a21 * v.x + a22 * v.y};
}

Point LatticeAffineMap::apply(const Point& p) const {
  return apply_linear(p) + c;
}

LatticeAffineMap LatticeAffineMap::inverse() const {
  const Int d = det();  // +-1, so the inverse is d * adj(A).
  LatticeAffineMap inv;
  inv.a11 = d * a22;
  inv.a12 = -d * a12;
  inv.a21 = -d * a21;
  inv.a22 = d * a11;
  inv.c = -inv.apply_linear(c);
  return inv;
}

LatticeAffineMap compose(const LatticeAffineMap& outer,
                         const LatticeAffineMap& inner) {
  LatticeAffineMap m;
  m.a11 = outer.a11 * inner.a11 + outer.a12 * inner.a21;
  m.a12 = outer.a11 * inner.a12 + outer.a12 * inner.a22;
  m.a21 = outer.a21 * inner.a11 + outer.a22 * inner.a21;
  m.a22 = outer.a21 * inner.a12 + outer.a22 * inner.a22;
  m.c = outer.apply(inner.c);
  return m;
}

Polygon convex_hull(std::span<const Point> points) {
  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) {
    throw Error(ErrorCode::DegenerateHull,
                "fewer than 3 distinct points");
  }
  // Andrew's monotone chain; collinear points are popped.
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Point& p : pts) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 1]) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    const Point& p = pts[i];
    while (k >= lower && cross(hull[k - 1] - hull[k - 2], p - hull[k - 1]) <= 0)
      --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  auto result = polygon_from_cycle(std::move(hull));
  if (!result) {
    throw Error(ErrorCode::DegenerateHull, "all points are collinear");
  }
  return *std::move(result);
}

Rat area(const Polygon& p) { return twice_signed_area(p.vertices()) / 2; }

bool contains(const Polygon& p, const Point& q) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (cross(p.edge(static_cast<std::ptrdiff_t>(i)), q - p.vertex(static_cast<std::ptrdiff_t>(i))) < 0)
      return false;
  }
  return true;
}

bool contains(const Polygon& outer, const Polygon& inner) {
  return std::all_of(inner.vertices().begin(), inner.vertices().end(),
                     [&](const Point& v) { return contains(outer, v); });
}

std::optional<Polygon> clip(const Polygon& p, const HalfPlane& h) {
  const auto& v = p.vertices();
  const std::size_t n = v.size();
  std::vector<Rat> value(n);
  bool all_inside = true;
  for (std::size_t i = 0; i < n; ++i) {
    value[i] = h.evaluate(v[i]);
    all_inside = all_inside && value[i] >= 0;
  }
  if (all_inside) return p;

  std::vector<Point> out;
  out.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    if (value[i] >= 0) out.push_back(v[i]);
    if ((value[i] > 0 && value[j] < 0) || (value[i] < 0 && value[j] > 0)) {
      const Rat t = value[i] / (value[i] - value[j]);
      out.push_back(v[i] + t * (v[j] - v[i]));
    }
  }
  return polygon_from_cycle(std::move(out));
}

std::optional<Polygon> intersect(const Polygon& p, const Polygon& q) {
  std::optional<Polygon> result = p;
  for (const HalfPlane& h : h_rep(q)) {
    result = clip(*result, h);
    if (!result) return std::nullopt;
  }
  return result;
}

Rat sym_diff_distance(const Polygon& p, const Polygon& q) {
  if (p == q) return Rat(0);
  const auto common = intersect(p, q);
  const Rat overlap = common ? area(*common) : Rat(0);
  return area(p) + area(q) - 2 * overlap;
}

Rat dh_measure(const Polygon& p, const Rect& r) {
  const HalfPlane sides[] = {
      {{1, 0}, r.x_min},
      {{-1, 0}, -r.x_max},
      {{0, 1}, r.y_min},
      {{0, -1}, -r.y_max},
  };
  std::optional<Polygon> result = p;
  for (const HalfPlane& h : sides) {
    result = clip(*result, h);
    if (!result) return Rat(0);
  }
  return area(*result);
}

Polygon apply_map(const LatticeAffineMap& m, const Polygon& p) {
  std::vector<Point> image;
  image.reserve(p.size());
  for (const Point& v : p.vertices()) image.push_back(m.apply(v));
  return Polygon::from_vertices(std::move(image));
}

std::vector<HalfPlane> h_rep(const Polygon& p) {
  std::vector<HalfPlane> result;
  result.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto idx = static_cast<std::ptrdiff_t>(i);
    const Vec2 e = p.edge(idx);
    // Counterclockwise boundary: the interior is on the left.
    result.push_back(
        half_plane_through(primitive_direction({-e.y, e.x}), p.vertex(idx)));
  }
  return result;
}

Polygon translate(const Polygon& p, const Vec2& offset) {
  std::vector<Point> moved;
  moved.reserve(p.size());
  for (const Point& v : p.vertices()) moved.push_back(v + offset);
  return Polygon::from_vertices(std::move(moved));
}

Polygon scale(const Polygon& p, const Rat& factor) {
  if (factor <= 0) {
    throw Error(ErrorCode::NonPositiveParameter,
                "scale factor " + to_string(factor) + " must be positive");
  }
  std::vector<Point> scaled;
  scaled.reserve(p.size());
  for (const Point& v : p.vertices()) scaled.push_back(factor * v);
  return Polygon::from_vertices(std::move(scaled));
}

}  // namespace toric
