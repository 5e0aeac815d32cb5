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

#include "toric/float_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <utility>

#include "toric/error.hpp"

namespace toric {

namespace {

double cross(FloatPoint o, FloatPoint a, FloatPoint b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double twice_signed_area(const std::vector<FloatPoint>& v) {
  double sum = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const FloatPoint& a = v[i];
    const FloatPoint& b = v[(i + 1) % v.size()];
    sum += a.x * b.y - a.y * b.x;
  }
  return sum;
}

double segment_distance(FloatPoint p, FloatPoint a, FloatPoint b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p.x - (a.x + t * dx), p.y - (a.y + t * dy));
}

// Integer direction (p, q) with entries at most max_entry that is parallel to
// (dx, dy) within kFloatTolerance, found among continued fraction convergents
// of the dominant ratio.
std::optional<std::pair<long long, long long>> small_lattice_direction(
    double dx, double dy, long long max_entry) {
  const bool swap = std::abs(dy) > std::abs(dx);
  const double big = swap ? dy : dx;
  const double small = swap ? dx : dy;
  double ratio = small / big;  // in [-1, 1]
  long long h_prev = 1, h = static_cast<long long>(std::floor(ratio));
  long long k_prev = 0, k = 1;
  double rest = ratio - std::floor(ratio);
  for (int depth = 0; depth < 64; ++depth) {
    // Candidate direction: (k, h) in (big, small) coordinates.
    const double norm = std::hypot(static_cast<double>(k), static_cast<double>(h));
    const double len = std::hypot(big, small);
    if (std::abs(static_cast<double>(k) * small - static_cast<double>(h) * big) <=
        kFloatTolerance * norm * len) {
      const long long s = big >= 0 ? 1 : -1;
      const long long u = s * k;
      const long long w = s * h;
      return swap ? std::make_pair(w, u) : std::make_pair(u, w);
    }
    if (rest <= 0) break;
    const double inv = 1.0 / rest;
    const auto a = static_cast<long long>(std::floor(inv));
    rest = inv - static_cast<double>(a);
    const long long h_next = a * h + h_prev;
    const long long k_next = a * k + k_prev;
    if (k_next > max_entry || std::llabs(h_next) > max_entry) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  return std::nullopt;
}

}  // namespace

FloatPolygon FloatPolygon::from_vertices(std::vector<FloatPoint> v) {
  if (v.size() < 3) {
    throw Error(ErrorCode::InvariantViolation,
                "polygon needs at least 3 vertices");
  }
  for (const FloatPoint& p : v) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw Error(ErrorCode::InvariantViolation, "non-finite coordinate");
    }
  }
  const double a = twice_signed_area(v);
  if (std::abs(a) <= kFloatTolerance) {
    throw Error(ErrorCode::InvariantViolation, "polygon has zero area");
  }
  if (a < 0) std::reverse(v.begin(), v.end());
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const FloatPoint& prev = v[(i + n - 1) % n];
    const FloatPoint& next = v[(i + 1) % n];
    if (prev == v[i]) {
      throw Error(ErrorCode::InvariantViolation,
                  "repeated vertex at " + std::to_string(i));
    }
    if (cross(prev, v[i], next) < -kFloatTolerance) {
      throw Error(ErrorCode::InvariantViolation,
                  "reflex vertex at " + std::to_string(i));
    }
  }
  return FloatPolygon(std::move(v));
}

const FloatPoint& FloatPolygon::vertex(std::ptrdiff_t i) const {
  const auto n = static_cast<std::ptrdiff_t>(vertices_.size());
  return vertices_[static_cast<std::size_t>(((i % n) + n) % n)];
}

FloatBox FloatPolygon::bounding_box() const {
  FloatBox box{vertices_[0].x, vertices_[0].x, vertices_[0].y, vertices_[0].y};
  for (const FloatPoint& p : vertices_) {
    box.x_min = std::min(box.x_min, p.x);
    box.x_max = std::max(box.x_max, p.x);
    box.y_min = std::min(box.y_min, p.y);
    box.y_max = std::max(box.y_max, p.y);
  }
  return box;
}

FloatPolygon to_float(const Polygon& p) {
  std::vector<FloatPoint> v;
  v.reserve(p.size());
  for (const Point& q : p.vertices()) v.push_back({to_double(q.x), to_double(q.y)});
  return FloatPolygon::from_vertices(std::move(v));
}

FloatPolygon convex_hull(std::span<const FloatPoint> points) {
  std::vector<FloatPoint> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](const FloatPoint& a, const FloatPoint& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) {
    throw Error(ErrorCode::DegenerateHull, "fewer than 3 distinct points");
  }
  std::vector<FloatPoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (const FloatPoint& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  if (hull.size() < 3) {
    throw Error(ErrorCode::DegenerateHull, "all points are collinear");
  }
  return FloatPolygon::from_vertices(std::move(hull));
}

double area(const FloatPolygon& p) { return twice_signed_area(p.vertices()) / 2; }

bool contains(const FloatPolygon& p, FloatPoint q) {
  const auto& v = p.vertices();
  const std::size_t n = v.size();
  // Fan from v[0]: find the wedge containing q by binary search.
  if (cross(v[0], v[1], q) < 0 || cross(v[0], v[n - 1], q) > 0) return false;
  std::size_t lo = 1;
  std::size_t hi = n - 1;
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    if (cross(v[0], v[mid], q) >= 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return cross(v[lo], v[lo + 1], q) >= 0;
}

double distance(const FloatPolygon& p, FloatPoint q) {
  if (contains(p, q)) return 0;
  double best = INFINITY;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto idx = static_cast<std::ptrdiff_t>(i);
    best = std::min(best, segment_distance(q, p.vertex(idx), p.vertex(idx + 1)));
  }
  return best;
}

std::optional<FloatPolygon> clip(const FloatPolygon& p, double nx, double ny,
                                 double offset) {
  const auto& v = p.vertices();
  const std::size_t n = v.size();
  std::vector<double> value(n);
  for (std::size_t i = 0; i < n; ++i) value[i] = nx * v[i].x + ny * v[i].y - offset;
  std::vector<FloatPoint> out;
  out.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = (i + 1) % n;
    if (value[i] >= 0) out.push_back(v[i]);
    if ((value[i] > 0 && value[j] < 0) || (value[i] < 0 && value[j] > 0)) {
      const double t = value[i] / (value[i] - value[j]);
      out.push_back({v[i].x + t * (v[j].x - v[i].x), v[i].y + t * (v[j].y - v[i].y)});
    }
  }
  // Drop near-duplicates produced by grazing cuts.
  std::vector<FloatPoint> cleaned;
  for (const FloatPoint& q : out) {
    if (cleaned.empty() || std::hypot(q.x - cleaned.back().x, q.y - cleaned.back().y) > 1e-15)
      cleaned.push_back(q);
  }
  while (cleaned.size() > 1 &&
         std::hypot(cleaned.front().x - cleaned.back().x,
                    cleaned.front().y - cleaned.back().y) <= 1e-15) {
    cleaned.pop_back();
  }
  if (cleaned.size() < 3 || twice_signed_area(cleaned) <= 1e-18) return std::nullopt;
  try {
    return FloatPolygon::from_vertices(std::move(cleaned));
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::optional<FloatPolygon> intersect(const FloatPolygon& p,
                                      const FloatPolygon& q) {
  std::optional<FloatPolygon> result = p;
  for (std::size_t i = 0; i < q.size() && result; ++i) {
    const auto idx = static_cast<std::ptrdiff_t>(i);
    const FloatPoint a = q.vertex(idx);
    const FloatPoint b = q.vertex(idx + 1);
    const double nx = -(b.y - a.y);
    const double ny = b.x - a.x;
    result = clip(*result, nx, ny, nx * a.x + ny * a.y);
  }
  return result;
}

double sym_diff_area(const FloatPolygon& p, const FloatPolygon& q) {
  const auto common = intersect(p, q);
  const double overlap = common ? area(*common) : 0.0;
  return std::max(0.0, area(p) + area(q) - 2 * overlap);
}

double hausdorff(const FloatPolygon& p, const FloatPolygon& q) {
  double result = 0;
  for (const FloatPoint& v : p.vertices()) result = std::max(result, distance(q, v));
  for (const FloatPoint& v : q.vertices()) result = std::max(result, distance(p, v));
  return result;
}

double hausdorff(const Polygon& p, const Polygon& q) {
  return hausdorff(to_float(p), to_float(q));
}

std::vector<FloatEdgeConstraint> h_rep(const FloatPolygon& p, long long max_entry) {
  std::vector<FloatEdgeConstraint> result;
  result.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto idx = static_cast<std::ptrdiff_t>(i);
    const FloatPoint a = p.vertex(idx);
    const FloatPoint b = p.vertex(idx + 1);
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double len = std::hypot(dx, dy);
    FloatEdgeConstraint c;
    c.nx = -dy / len;
    c.ny = dx / len;
    c.offset = c.nx * a.x + c.ny * a.y;
    if (const auto dir = small_lattice_direction(dx, dy, max_entry)) {
      c.rational_slope = true;
      c.lattice_normal = {Int(-dir->second), Int(dir->first)};
    }
    result.push_back(c);
  }
  return result;
}

AreaEstimate estimate_sym_diff(const Indicator& a, const Indicator& b,
                               const FloatBox& box, std::uint64_t seed,
                               std::size_t samples) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(box.x_min, box.x_max);
  std::uniform_real_distribution<double> uy(box.y_min, box.y_max);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double x = ux(rng);
    const double y = uy(rng);
    if (a(x, y) != b(x, y)) ++hits;
  }
  const double n = static_cast<double>(samples);
  const double p = static_cast<double>(hits) / n;
  return {box.area() * p, box.area() * std::sqrt(p * (1 - p) / n)};
}

Indicator indicator(const FloatPolygon& p) {
  return [p](double x, double y) { return contains(p, FloatPoint{x, y}); };
}

Indicator indicator(const Polygon& p) { return indicator(to_float(p)); }

FloatBox union_box(const FloatBox& a, const FloatBox& b) {
  return {std::min(a.x_min, b.x_min), std::max(a.x_max, b.x_max),
          std::min(a.y_min, b.y_min), std::max(a.y_max, b.y_max)};
}

}  // namespace toric
