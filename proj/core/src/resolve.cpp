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

#include "toric/resolve.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>
#include <string>

#include "toric/error.hpp"

namespace toric {

namespace {

Rat squared_distance(const Point& a, const Point& b) {
  const Vec2 d = a - b;
  return dot(d, d);
}

Rat min_pairwise_squared_distance(const Polygon& p) {
  const auto& v = p.vertices();
  Rat best = squared_distance(v[0], v[1]);
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      const Rat d = squared_distance(v[i], v[j]);
      if (d < best) best = d;
    }
  }
  return best;
}

LatticeAffineMap linear(Int a11, Int a12, Int a21, Int a22) {
  LatticeAffineMap m;
  m.a11 = std::move(a11);
  m.a12 = std::move(a12);
  m.a21 = std::move(a21);
  m.a22 = std::move(a22);
  return m;
}

const LatticeAffineMap& quarter_turn() {
  static const LatticeAffineMap b = linear(0, -1, 1, 0);
  return b;
}

}  // namespace

Int vertex_defect(const Polygon& p, std::size_t vertex) {
  if (vertex >= p.size()) {
    throw Error(ErrorCode::ParameterOutOfRange,
                "vertex index " + std::to_string(vertex) + " out of range");
  }
  return abs(vertex_frame(p, vertex).det);
}

Int solve_alpha0(const IVec& u, const IVec& w, const Int& alpha1) {
  for (Int a0 = 0; a0 < alpha1; ++a0) {
    if (mod(u.x * a0 - w.x, alpha1) == 0 && mod(u.y * a0 - w.y, alpha1) == 0) {
      return a0;
    }
  }
  throw Error(ErrorCode::InvariantViolation,
              "no alpha0 modulo " + alpha1.str() + "; directions not primitive");
}

Resolution resolve_vertex(const Polygon& p, std::size_t vertex, const Rat& eps) {
  if (vertex >= p.size()) {
    throw Error(ErrorCode::ParameterOutOfRange,
                "vertex index " + std::to_string(vertex) + " out of range");
  }
  if (eps <= 0) {
    throw Error(ErrorCode::NonPositiveParameter,
                "epsilon " + to_string(eps) + " must be positive");
  }
  const VertexFrame start = vertex_frame(p, vertex);
  const Int alpha1 = abs(start.det);
  if (alpha1 == 1) {
    throw Error(ErrorCode::DefectOne,
                "vertex " + std::to_string(vertex) + " is already smooth");
  }
  const Point v = start.vertex;
  const Rat eps2 = eps * eps;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i != vertex && squared_distance(p.vertices()[i], v) <= eps2) {
      throw Error(ErrorCode::EpsilonTooLarge,
                  "epsilon ball around vertex " + std::to_string(vertex) +
                      " contains vertex " + std::to_string(i));
    }
  }

  ResolutionTrace trace;
  trace.epsilon = eps;
  trace.resolved_vertex = v;
  trace.alpha_sequence.push_back(alpha1);

  // A [u w] = [[1, alpha0], [0, alpha1]].
  const IVec& u = start.u1;
  const IVec& w = start.u2;
  const Int alpha0 = solve_alpha0(u, w, alpha1);
  LatticeAffineMap transform = linear((w.y - alpha0 * u.y) / alpha1,
                                      (alpha0 * u.x - w.x) / alpha1, -u.y, u.x);
  trace.applied_maps.push_back(transform);

  // In transformed coordinates the current vertex has edge directions (1, 0)
  // and (second, height).
  Polygon current = p;
  Point q = v;
  Int height = alpha1;
  Int second = alpha0;
  while (true) {
    const Int k = -floor_div(second, height);
    const LatticeAffineMap shear = linear(1, k, 0, 1);
    transform = compose(shear, transform);
    trace.applied_maps.push_back(shear);
    const Int next = second + k * height;  // 0 < next < height
    trace.alpha_sequence.push_back(next);

    const auto index = current.find_vertex(q);
    assert(index);
    const VertexFrame f = vertex_frame(current, *index);
    assert(transform.apply_linear(f.u1) == (IVec{1, 0}));
    assert(transform.apply_linear(f.u2) == (IVec{next, height}));

    // Cut { x' >= q'.x + delta } in transformed coordinates. It meets the
    // first edge at q + delta u1 and the second at q + (delta / next) u2.
    Rat delta = std::min(f.len1, Rat(next) * f.len2) / 2;
    Point q1 = q + delta * f.u1.to_rat();
    Point q2 = q + (delta / Rat(next)) * f.u2.to_rat();
    while (squared_distance(q1, v) >= eps2 || squared_distance(q2, v) >= eps2) {
      delta /= 2;
      q1 = q + delta * f.u1.to_rat();
      q2 = q + (delta / Rat(next)) * f.u2.to_rat();
    }
    const IVec normal{transform.a11, transform.a12};
    auto cut = clip(current, HalfPlane{normal, dot(normal, q) + delta});
    if (!cut || cut->size() != current.size() + 1) {
      throw Error(ErrorCode::ConvexityBroken,
                  "resolution cut does not add exactly one vertex");
    }
    current = *std::move(cut);
    ++trace.new_edges;
    trace.new_vertices.push_back(q1);
    if (next == 1) {
      trace.new_vertices.push_back(q2);
      break;
    }
    // At q2 the edges are (0, -1) towards q1 and (next, height); the quarter
    // turn brings them to (1, 0) and (-height, next).
    transform = compose(quarter_turn(), transform);
    trace.applied_maps.push_back(quarter_turn());
    second = -height;
    height = next;
    q = q2;
  }
  return {std::move(current), std::move(trace)};
}

Smoothing smooth(const Polygon& p, const Rat& eps) {
  if (eps <= 0) {
    throw Error(ErrorCode::NonPositiveParameter,
                "epsilon " + to_string(eps) + " must be positive");
  }
  if (4 * eps * eps >= min_pairwise_squared_distance(p)) {
    throw Error(ErrorCode::EpsilonTooLarge,
                "epsilon " + to_string(eps) +
                    " is not below half the minimum vertex distance");
  }
  const DelzantReport report = validate(p);
  Int bound = 0;
  std::vector<Point> targets;
  for (const NonSmoothVertex& ns : report.non_smooth_vertices) {
    bound += ns.defect - 1;
    targets.push_back(p.vertices()[ns.index]);
  }
  Polygon current = p;
  std::vector<ResolutionTrace> traces;
  std::size_t added = 0;
  // The eps-balls are pairwise disjoint, so each target survives the
  // resolutions before it.
  for (const Point& target : targets) {
    const auto index = current.find_vertex(target);
    assert(index);
    Resolution r = resolve_vertex(current, *index, eps);
    added += r.trace.new_edges;
    traces.push_back(std::move(r.trace));
    current = std::move(r.polygon);
  }
  const Rat loss = area(p) - area(current);
  return {DelzantPolygon::certify(std::move(current)), std::move(traces),
          std::move(bound), added, loss};
}

std::vector<Rat> convergents(const Rat& r, std::size_t max_terms) {
  std::vector<Rat> result;
  Int h_prev2 = 0, h_prev = 1;
  Int k_prev2 = 1, k_prev = 0;
  Rat x = r;
  while (result.size() < max_terms) {
    const Int a = floor(x);
    const Int h = a * h_prev + h_prev2;
    const Int k = a * k_prev + k_prev2;
    result.emplace_back(h, k);
    const Rat frac = x - Rat(a);
    if (frac == 0) break;
    x = 1 / frac;
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
  }
  return result;
}

namespace {

struct EdgeApproximation {
  Point anchor;
  bool x_dominant = true;
  int sign = 1;
  std::vector<Rat> slopes;

  Vec2 direction(std::size_t depth) const {
    const Rat& c = slopes[std::min(depth, slopes.size()) - 1];
    const Vec2 d = x_dominant ? Vec2{Rat(1), c} : Vec2{c, Rat(1)};
    return Rat(sign) * d;
  }
};

// Midpoints are snapped to this dyadic grid.
constexpr unsigned kAnchorBits = 40;

Rat snap(const Rat& x) {
  Int scale = 1;
  scale <<= kAnchorBits;
  return Rat(floor(x * Rat(scale) + Rat(1, 2)), scale);
}

}  // namespace

Rationalization rationalize(const FloatPolygon& p, double eps,
                            std::size_t max_depth) {
  if (!(eps > 0)) {
    throw Error(ErrorCode::NonPositiveParameter, "epsilon must be positive");
  }
  const std::size_t n = p.size();
  std::vector<EdgeApproximation> edges(n);
  std::size_t longest = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const auto at = [&](std::ptrdiff_t j) {
      const FloatPoint& f = p.vertex(j);
      return Point{from_double(f.x), from_double(f.y)};
    };
    const Point a = at(static_cast<std::ptrdiff_t>(i));
    const Point b = at(static_cast<std::ptrdiff_t>(i) + 1);
    const Vec2 d = b - a;
    EdgeApproximation& e = edges[i];
    e.x_dominant = abs(d.x) >= abs(d.y);
    const Rat& major = e.x_dominant ? d.x : d.y;
    const Rat& minor = e.x_dominant ? d.y : d.x;
    e.sign = major > 0 ? 1 : -1;
    e.slopes = convergents(minor / major, max_depth);
    const Point mid = Rat(1, 2) * (a + b);
    e.anchor = {snap(mid.x), snap(mid.y)};
    longest = std::max(longest, e.slopes.size());
  }

  const std::size_t last_depth = std::min(max_depth, longest);
  for (std::size_t depth = 1; depth <= last_depth; ++depth) {
    std::vector<Vec2> dirs;
    dirs.reserve(n);
    for (const EdgeApproximation& e : edges) dirs.push_back(e.direction(depth));
    bool turning = true;
    for (std::size_t i = 0; i < n && turning; ++i) {
      turning = cross(dirs[i], dirs[(i + 1) % n]) > 0;
    }
    if (!turning) continue;

    std::vector<Point> vertices;
    vertices.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t prev = (i + n - 1) % n;
      const Rat s = cross(edges[i].anchor - edges[prev].anchor, dirs[i]) /
                    cross(dirs[prev], dirs[i]);
      vertices.push_back(edges[prev].anchor + s * dirs[prev]);
    }
    std::optional<Polygon> candidate;
    try {
      candidate = Polygon::from_vertices(std::move(vertices));
    } catch (const Error&) {
      continue;
    }
    const double d = sym_diff_area(p, to_float(*candidate));
    if (d <= eps) return {*std::move(candidate), d, depth};
  }
  throw Error(ErrorCode::ToleranceUnachievable,
              "no rational polygon within tolerance up to convergent depth " +
                  std::to_string(max_depth));
}

SupportOracle SupportOracle::disc(double cx, double cy, double radius) {
  SupportOracle c;
  c.support = [=](double ux, double uy) {
    return cx * ux + cy * uy + radius * std::hypot(ux, uy);
  };
  c.bounding_box = {cx - radius, cx + radius, cy - radius, cy + radius};
  c.contains = [=](double x, double y) {
    return (x - cx) * (x - cx) + (y - cy) * (y - cy) <= radius * radius;
  };
  return c;
}

SupportOracle SupportOracle::polygon(const FloatPolygon& p) {
  SupportOracle c;
  c.support = [p](double ux, double uy) {
    double best = -INFINITY;
    for (const FloatPoint& v : p.vertices()) best = std::max(best, ux * v.x + uy * v.y);
    return best;
  };
  c.bounding_box = p.bounding_box();
  c.contains = indicator(p);
  return c;
}

FloatPolygon outer_polygon(const SupportOracle& c, std::size_t directions) {
  const FloatBox& b = c.bounding_box;
  const double margin = 1e-6 * std::max(b.x_max - b.x_min, b.y_max - b.y_min) + 1e-12;
  std::optional<FloatPolygon> result = FloatPolygon::from_vertices({
      {b.x_min - margin, b.y_min - margin},
      {b.x_max + margin, b.y_min - margin},
      {b.x_max + margin, b.y_max + margin},
      {b.x_min - margin, b.y_max + margin},
  });
  for (std::size_t i = 0; i < directions; ++i) {
    const double theta = 2 * std::numbers::pi * static_cast<double>(i) /
                         static_cast<double>(directions);
    const double ux = std::cos(theta);
    const double uy = std::sin(theta);
    auto next = clip(*result, -ux, -uy, -c.support(ux, uy));
    if (!next) {
      throw Error(ErrorCode::InvariantViolation,
                  "support function describes an empty set");
    }
    result = std::move(next);
  }
  return *std::move(result);
}

double hausdorff(const SupportOracle& c, const FloatPolygon& p,
                 std::size_t directions) {
  double worst = 0;
  for (std::size_t i = 0; i < directions; ++i) {
    const double theta = 2 * std::numbers::pi * static_cast<double>(i) /
                         static_cast<double>(directions);
    const double ux = std::cos(theta);
    const double uy = std::sin(theta);
    double hp = -INFINITY;
    for (const FloatPoint& v : p.vertices()) hp = std::max(hp, ux * v.x + uy * v.y);
    worst = std::max(worst, std::abs(c.support(ux, uy) - hp));
  }
  return worst;
}

namespace {

constexpr std::size_t kAreaDirections = 1024;

}  // namespace

InnerApproximation inner_polygon(const SupportOracle& c, double eps,
                                 std::size_t initial_grid,
                                 std::size_t max_grid) {
  if (!(eps > 0)) {
    throw Error(ErrorCode::NonPositiveParameter, "epsilon must be positive");
  }
  const FloatPolygon outer = outer_polygon(c, kAreaDirections);
  const double upper_area = area(outer);
  const Indicator inside = c.contains ? c.contains : indicator(outer);
  const FloatBox& box = c.bounding_box;

  for (std::size_t n = std::max<std::size_t>(initial_grid, 1); n <= max_grid; n *= 2) {
    const auto coord = [n](double lo, double hi, std::size_t i) {
      return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n);
    };
    // Range of grid points inside C on each horizontal grid line; convexity
    // makes it an interval.
    std::vector<std::ptrdiff_t> lo(n + 1, -1), hi(n + 1, -2);
    for (std::size_t j = 0; j <= n; ++j) {
      const double y = coord(box.y_min, box.y_max, j);
      for (std::size_t i = 0; i <= n; ++i) {
        if (inside(coord(box.x_min, box.x_max, i), y)) {
          if (lo[j] < 0) lo[j] = static_cast<std::ptrdiff_t>(i);
          hi[j] = static_cast<std::ptrdiff_t>(i);
        }
      }
    }
    std::vector<FloatPoint> corners;
    for (std::size_t j = 0; j < n; ++j) {
      if (lo[j] < 0 || lo[j + 1] < 0) continue;
      const std::ptrdiff_t left = std::max(lo[j], lo[j + 1]);
      const std::ptrdiff_t right = std::min(hi[j], hi[j + 1]);
      if (left >= right) continue;
      const double y0 = coord(box.y_min, box.y_max, j);
      const double y1 = coord(box.y_min, box.y_max, j + 1);
      const double x0 = coord(box.x_min, box.x_max, static_cast<std::size_t>(left));
      const double x1 = coord(box.x_min, box.x_max, static_cast<std::size_t>(right));
      corners.insert(corners.end(), {{x0, y0}, {x0, y1}, {x1, y0}, {x1, y1}});
    }
    if (corners.size() < 4) continue;
    FloatPolygon hull = convex_hull(corners);
    const double gap = std::max(0.0, upper_area - area(hull));
    if (gap <= eps) return {std::move(hull), gap, n};
  }
  throw Error(ErrorCode::ToleranceUnachievable,
              "inner grid approximation needs more than " +
                  std::to_string(max_grid) + " cells per side");
}

namespace {

DelzantApproximation finish_approximation(const FloatPolygon& p, double eps,
                                          double inner_gap) {
  const double stage_budget = eps / 3;
  Rationalization rational = rationalize(p, stage_budget);
  const Polygon& q = rational.polygon;

  Rat smoothing_eps = 0;
  const DelzantReport report = validate(q);
  std::optional<Smoothing> smoothing;
  if (!report.is_delzant) {
    // Each resolution stays inside an eps-ball (area < 4 eps^2), and the balls
    // must be disjoint.
    const Rat budget = from_double(stage_budget);
    const Rat spacing = min_pairwise_squared_distance(q);
    const Rat count(static_cast<long long>(report.non_smooth_vertices.size()));
    smoothing_eps = 1;
    while (4 * smoothing_eps * smoothing_eps >= spacing ||
           4 * count * smoothing_eps * smoothing_eps > budget) {
      smoothing_eps /= 2;
    }
    smoothing = smooth(q, smoothing_eps);
  }
  DelzantPolygon result =
      smoothing ? smoothing->polygon : DelzantPolygon::certify(q);
  const Rat loss = smoothing ? smoothing->loss : Rat(0);
  const double total = inner_gap + rational.distance + to_double(loss);
  return {std::move(result), inner_gap, rational.distance, loss,
          smoothing_eps, total};
}

}  // namespace

DelzantApproximation delzant_approximate(const SupportOracle& c, double eps) {
  if (!(eps > 0)) {
    throw Error(ErrorCode::NonPositiveParameter, "epsilon must be positive");
  }
  const InnerApproximation inner = inner_polygon(c, eps / 3);
  return finish_approximation(inner.polygon, eps, inner.gap_estimate);
}

DelzantApproximation delzant_approximate(const FloatPolygon& p, double eps) {
  if (!(eps > 0)) {
    throw Error(ErrorCode::NonPositiveParameter, "epsilon must be positive");
  }
  return finish_approximation(p, eps, 0.0);
}

}  // namespace toric
