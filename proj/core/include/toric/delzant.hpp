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

// Delzant polygons: convex lattice-direction polygons whose primitive edge
// directions form a Z-basis at every vertex. These are exactly the momentum
// images of compact symplectic toric 4-manifolds.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "toric/geometry.hpp"

namespace toric {

/// Local data at a vertex. `u1` points along the outgoing edge (towards the
/// next vertex), `u2` along the incoming edge reversed (towards the previous
/// vertex); counterclockwise order makes det(u1, u2) > 0.
struct VertexFrame {
  Point vertex;
  IVec u1;
  IVec u2;
  Int det;
  Rat len1;
  Rat len2;
};

VertexFrame vertex_frame(const Polygon& p, std::size_t index);

/// Lattice-normalized length of the segment pq: the l with q - p = l * u for
/// a primitive integer u. Throws ZeroSegment when p == q.
Rat rational_length(const Point& p, const Point& q);

struct NonSmoothVertex {
  std::size_t index;
  Int defect;
};

struct DelzantReport {
  bool is_rational = true;
  /// Always true for a vertex cycle in the plane; reported for completeness.
  bool is_simple = true;
  std::vector<Int> determinants;
  std::vector<NonSmoothVertex> non_smooth_vertices;
  bool is_delzant = false;
};

DelzantReport validate(const Polygon& p);

class DelzantPolygon {
 public:
  /// Throws NotDelzant listing the non-smooth vertices.
  static DelzantPolygon certify(Polygon p);

  const Polygon& polygon() const { return polygon_; }
  const std::vector<VertexFrame>& frames() const { return frames_; }
  std::size_t size() const { return polygon_.size(); }
  const Point& vertex(std::ptrdiff_t i) const { return polygon_.vertex(i); }

  friend bool operator==(const DelzantPolygon& a, const DelzantPolygon& b) {
    return a.polygon_ == b.polygon_;
  }

 private:
  DelzantPolygon(Polygon p, std::vector<VertexFrame> f)
      : polygon_(std::move(p)), frames_(std::move(f)) {}

  Polygon polygon_;
  std::vector<VertexFrame> frames_;
};

/// { x >= 0, y >= 0, x + y <= lambda }. Throws NonPositiveParameter.
DelzantPolygon delzant_triangle(const Rat& lambda);

/// { -b/2 <= y <= b/2, 0 <= x <= a - k y }. Requires b > 0, a >= b and
/// a - k b / 2 > 0; throws ConstraintViolation naming the failed inequality.
DelzantPolygon hirzebruch(const Rat& a, const Rat& b, std::int64_t k);

/// Checks the admissibility inequalities without building the polygon.
bool hirzebruch_admissible(const Rat& a, const Rat& b, std::int64_t k);

/// Intersects p with { v + t1 u1 + t2 u2 : t1 + t2 >= eps } at vertex v.
/// Requires 0 < eps < min(len1, len2); throws ChopTooLarge otherwise and
/// NonPositiveParameter for eps <= 0.
DelzantPolygon corner_chop(const DelzantPolygon& p, std::size_t vertex,
                           const Rat& eps);

/// Inward half-plane used by corner_chop.
HalfPlane chop_half_plane(const VertexFrame& frame, const Rat& eps);

/// Open interval of admissible edge slide offsets; an empty bound means the
/// slide is unbounded in that direction.
struct SlideInterval {
  std::optional<Rat> lower;
  std::optional<Rat> upper;

  bool contains(const Rat& t) const {
    return (!lower || t > *lower) && (!upper || t < *upper);
  }
};

SlideInterval slide_interval(const DelzantPolygon& p, std::size_t edge);

/// Moves edge `edge` parallel to itself so that its half-plane offset grows
/// by `t` (positive moves inward). Throws SlideOutOfRange unless t lies in
/// slide_interval.
DelzantPolygon edge_slide(const DelzantPolygon& p, std::size_t edge,
                          const Rat& t);

/// Returns m in AGL(2, Z) with apply_map(m, p) == q, if one exists.
std::optional<LatticeAffineMap> congruent(const DelzantPolygon& p,
                                          const DelzantPolygon& q);

/// Invariant of AGL(2, Z)-congruence: equal fingerprints are necessary for
/// congruence. `lengths` is the least rotation of the cyclic sequence of edge
/// rational lengths, taken over both traversal directions.
struct CongruenceFingerprint {
  std::size_t edges = 0;
  Rat area;
  std::vector<Rat> lengths;

  friend bool operator==(const CongruenceFingerprint&,
                         const CongruenceFingerprint&) = default;
};

CongruenceFingerprint congruence_fingerprint(const DelzantPolygon& p);

}  // namespace toric
