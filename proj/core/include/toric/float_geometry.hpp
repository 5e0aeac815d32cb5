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

// Double precision polygons. These only carry data that has no exact rational
// form (irrational slopes, discs) and feed the approximation chain.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "toric/geometry.hpp"

namespace toric {

inline constexpr double kFloatTolerance = 1e-9;

struct FloatPoint {
  double x = 0;
  double y = 0;

  friend bool operator==(const FloatPoint&, const FloatPoint&) = default;
};

struct FloatBox {
  double x_min = 0;
  double x_max = 0;
  double y_min = 0;
  double y_max = 0;

  double area() const { return (x_max - x_min) * (y_max - y_min); }
};

/// Convex counterclockwise polygon in doubles. Convexity is checked to
/// kFloatTolerance; nearly collinear vertices are kept.
class FloatPolygon {
 public:
  /// Accepts either orientation. Throws InvariantViolation.
  static FloatPolygon from_vertices(std::vector<FloatPoint> vertices);

  const std::vector<FloatPoint>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const FloatPoint& vertex(std::ptrdiff_t i) const;

  FloatBox bounding_box() const;

 private:
  explicit FloatPolygon(std::vector<FloatPoint> v) : vertices_(std::move(v)) {}
  std::vector<FloatPoint> vertices_;
};

FloatPolygon to_float(const Polygon& p);

/// Monotone chain hull; collinear points are dropped. Throws DegenerateHull.
FloatPolygon convex_hull(std::span<const FloatPoint> points);

double area(const FloatPolygon& p);

/// O(log n) inside-or-on-boundary test.
bool contains(const FloatPolygon& p, FloatPoint q);

/// Euclidean distance from q to the polygon (zero inside).
double distance(const FloatPolygon& p, FloatPoint q);

/// Clips by { x : n . x >= offset }; nullopt when less than a sliver remains.
std::optional<FloatPolygon> clip(const FloatPolygon& p, double nx, double ny,
                                 double offset);
std::optional<FloatPolygon> intersect(const FloatPolygon& p,
                                      const FloatPolygon& q);

/// Symmetric difference area computed by floating clipping.
double sym_diff_area(const FloatPolygon& p, const FloatPolygon& q);

/// Hausdorff distance. For convex sets the farthest point of one set from the
/// other is a vertex, so only vertex-to-set distances are evaluated.
double hausdorff(const FloatPolygon& p, const FloatPolygon& q);
double hausdorff(const Polygon& p, const Polygon& q);

/// Per-edge inward constraint of a float polygon. Normals are unit length.
/// `rational_slope` is set when the edge direction agrees to kFloatTolerance
/// with an integer vector of entries at most `max_entry`; only then is
/// `lattice_normal` meaningful.
struct FloatEdgeConstraint {
  double nx = 0;
  double ny = 0;
  double offset = 0;
  bool rational_slope = false;
  IVec lattice_normal;
};
std::vector<FloatEdgeConstraint> h_rep(const FloatPolygon& p,
                                       long long max_entry = 1000);

/// Monte-Carlo estimate of the area of a symmetric difference.
struct AreaEstimate {
  double value = 0;
  /// Binomial standard deviation of the estimate.
  double sigma = 0;
};

using Indicator = std::function<bool(double, double)>;

/// Samples `samples` uniform points in `box` (which must contain both
/// sets) with a generator seeded by `seed`. Deterministic per seed.
AreaEstimate estimate_sym_diff(const Indicator& a, const Indicator& b,
                               const FloatBox& box, std::uint64_t seed,
                               std::size_t samples);

Indicator indicator(const FloatPolygon& p);
Indicator indicator(const Polygon& p);

FloatBox union_box(const FloatBox& a, const FloatBox& b);

}  // namespace toric
