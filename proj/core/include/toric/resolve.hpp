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

// Approximation of convex bodies by Delzant polygons.
//
// The chain runs in three stages, each with a share of the error budget:
//
//   convex body --inner_polygon--> polygon --rationalize--> rational polygon
//               --smooth--> Delzant polygon
//
// smooth() resolves every non-smooth vertex by a sequence of cuts. At a vertex
// with primitive edge directions u, w and defect m = |det[u w]|, a unimodular
// A sends u to (1, 0) and w to (alpha0, m). A shear then brings the second
// direction to (alpha, m) with 0 < alpha < m, and a cut parallel to the
// second axis replaces the vertex by a smooth one and a vertex of defect
// alpha. Rotating by a quarter turn and repeating terminates because the
// defects strictly decrease, after at most m - 1 cuts.

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "toric/delzant.hpp"
#include "toric/float_geometry.hpp"

namespace toric {

/// |det| of the primitive edge directions at a vertex; 1 means smooth.
Int vertex_defect(const Polygon& p, std::size_t vertex);

/// Smallest alpha0 in [0, alpha1) with u.x alpha0 = w.x and u.y alpha0 = w.y
/// (mod alpha1); exists whenever u is primitive and |det[u w]| = alpha1.
Int solve_alpha0(const IVec& u, const IVec& w, const Int& alpha1);

struct ResolutionTrace {
  /// alpha1 > alpha2 > ... > 1; alpha1 is the vertex defect.
  std::vector<Int> alpha_sequence;
  /// Linear unimodular maps in the order applied: A, S1, B, S2, B, S3, ...
  std::vector<LatticeAffineMap> applied_maps;
  std::size_t new_edges = 0;
  Rat epsilon;
  Point resolved_vertex;
  /// Vertices of the output that replace the resolved one.
  std::vector<Point> new_vertices;
};

struct Resolution {
  Polygon polygon;
  ResolutionTrace trace;
};

/// Resolves one non-smooth vertex; the output differs from p only inside the
/// open eps-ball around it. Throws DefectOne for a smooth vertex,
/// NonPositiveParameter for eps <= 0, and EpsilonTooLarge when the closed
/// ball contains another vertex.
Resolution resolve_vertex(const Polygon& p, std::size_t vertex, const Rat& eps);

struct Smoothing {
  DelzantPolygon polygon;
  std::vector<ResolutionTrace> traces;
  /// Sum of (defect - 1) over the non-smooth input vertices.
  Int edge_bound;
  std::size_t added_edges = 0;
  /// Exact d(input, output); the output is contained in the input.
  Rat loss;
};

/// Resolves every non-smooth vertex. Requires 0 < eps and 2 eps below the
/// minimum pairwise vertex distance (EpsilonTooLarge otherwise).
Smoothing smooth(const Polygon& p, const Rat& eps);

/// Convergents of the regular continued fraction of r, at most max_terms.
std::vector<Rat> convergents(const Rat& r, std::size_t max_terms);

struct Rationalization {
  Polygon polygon;
  /// Symmetric difference area to the input, by floating clipping.
  double distance = 0;
  std::size_t depth = 0;
};

/// Replaces every edge direction by a continued fraction convergent of its
/// slope and every edge line by a parallel line through a dyadic point near
/// the edge midpoint, deepening the convergents until the result is convex
/// with the same edge count and within eps. Throws ToleranceUnachievable after
/// max_depth.
Rationalization rationalize(const FloatPolygon& p, double eps,
                            std::size_t max_depth = 64);

/// Compact convex body given by its support function h(u) = max <u, x>,
/// a bounding box, and a membership test. When `contains` is empty,
/// membership is taken from a fine outer polygon built from `support`.
struct SupportOracle {
  std::function<double(double, double)> support;
  FloatBox bounding_box;
  Indicator contains;

  static SupportOracle disc(double cx, double cy, double radius);
  static SupportOracle polygon(const FloatPolygon& p);
};

/// Outer polygon { x : <u_i, x> <= h(u_i) } over `directions` equally spaced
/// unit vectors.
FloatPolygon outer_polygon(const SupportOracle& c, std::size_t directions);

/// Hausdorff distance between a body and a polygon, as the largest support
/// function gap over `directions` equally spaced unit vectors.
double hausdorff(const SupportOracle& c, const FloatPolygon& p,
                 std::size_t directions = 4096);

struct InnerApproximation {
  FloatPolygon polygon;
  /// Upper estimate of area(C) - area(polygon).
  double gap_estimate = 0;
  std::size_t grid = 0;
};

/// Convex hull of the grid cells lying inside C, refined by doubling the grid
/// until the gap estimate is at most eps. Throws ToleranceUnachievable when
/// the grid would exceed max_grid.
InnerApproximation inner_polygon(const SupportOracle& c, double eps,
                                 std::size_t initial_grid = 8,
                                 std::size_t max_grid = 4096);

struct DelzantApproximation {
  DelzantPolygon polygon;
  double inner_gap = 0;
  double rational_distance = 0;
  Rat smoothing_loss;
  Rat smoothing_epsilon;
  /// inner_gap + rational_distance + smoothing_loss, an upper estimate of the
  /// distance between the input and the result.
  double total_bound = 0;
};

/// Delzant polygon within eps of the body, spending eps/3 on each stage.
DelzantApproximation delzant_approximate(const SupportOracle& c, double eps);
DelzantApproximation delzant_approximate(const FloatPolygon& p, double eps);

}  // namespace toric
