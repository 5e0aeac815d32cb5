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

#include "toric/delzant.hpp"

#include <algorithm>
#include <string>

#include "toric/error.hpp"

namespace toric {

namespace {

std::ptrdiff_t idx(std::size_t i) { return static_cast<std::ptrdiff_t>(i); }

// Constraint 1 + c t > 0 folded into an open interval.
void tighten(SlideInterval& interval, const Rat& c) {
  if (c > 0) {
    const Rat bound = -1 / c;
    if (!interval.lower || bound > *interval.lower) interval.lower = bound;
  } else if (c < 0) {
    const Rat bound = -1 / c;
    if (!interval.upper || bound < *interval.upper) interval.upper = bound;
  }
}

std::string describe(const SlideInterval& s) {
  return "(" + (s.lower ? to_string(*s.lower) : std::string("-inf")) + ", " +
         (s.upper ? to_string(*s.upper) : std::string("+inf")) + ")";
}

}  // namespace

Rat rational_length(const Point& p, const Point& q) {
  const Vec2 d = q - p;
  if (d.x == 0 && d.y == 0) {
    throw Error(ErrorCode::ZeroSegment, "segment endpoints coincide");
  }
  const Int l = lcm(den(d.x), den(d.y));
  const IVec scaled{num(d.x) * (l / den(d.x)), num(d.y) * (l / den(d.y))};
  return Rat(primitive(scaled).multiplicity, l);
}

VertexFrame vertex_frame(const Polygon& p, std::size_t index) {
  const Point& v = p.vertex(idx(index));
  const Point& next = p.vertex(idx(index) + 1);
  const Point& prev = p.vertex(idx(index) - 1);
  VertexFrame f{v,
                primitive_direction(next - v),
                primitive_direction(prev - v),
                Int(0),
                rational_length(v, next),
                rational_length(v, prev)};
  f.det = cross(f.u1, f.u2);
  return f;
}

DelzantReport validate(const Polygon& p) {
  DelzantReport report;
  // Rational vertices give rational edge directions.
  report.is_rational = true;
  report.is_simple = true;
  report.determinants.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Int d = vertex_frame(p, i).det;
    report.determinants.push_back(d);
    if (abs(d) != 1) report.non_smooth_vertices.push_back({i, abs(d)});
  }
  report.is_delzant = report.is_rational && report.non_smooth_vertices.empty();
  return report;
}

DelzantPolygon DelzantPolygon::certify(Polygon p) {
  std::vector<VertexFrame> frames;
  frames.reserve(p.size());
  std::string defects;
  for (std::size_t i = 0; i < p.size(); ++i) {
    frames.push_back(vertex_frame(p, i));
    if (frames.back().det != 1) {
      if (!defects.empty()) defects += ", ";
      defects += "vertex " + std::to_string(i) + " (defect " +
                 abs(frames.back().det).str() + ")";
    }
  }
  if (!defects.empty()) {
    throw Error(ErrorCode::NotDelzant, "non-smooth " + defects);
  }
  return DelzantPolygon(std::move(p), std::move(frames));
}

DelzantPolygon delzant_triangle(const Rat& lambda) {
  if (lambda <= 0) {
    throw Error(ErrorCode::NonPositiveParameter,
                "lambda = " + to_string(lambda) + " must be positive");
  }
  return DelzantPolygon::certify(Polygon::from_vertices(
      {{Rat(0), Rat(0)}, {lambda, Rat(0)}, {Rat(0), lambda}}));
}

bool hirzebruch_admissible(const Rat& a, const Rat& b, std::int64_t k) {
  return k >= 0 && b > 0 && a >= b && a - Rat(k) * b / 2 > 0;
}

DelzantPolygon hirzebruch(const Rat& a, const Rat& b, std::int64_t k) {
  const auto fail = [&](const std::string& inequality) {
    throw Error(ErrorCode::ConstraintViolation,
                "H(" + to_string(a) + ", " + to_string(b) + ", " +
                    std::to_string(k) + ") violates " + inequality);
  };
  if (k < 0) fail("k >= 0");
  if (b <= 0) fail("b > 0");
  if (a < b) fail("a >= b");
  const Rat half_b = b / 2;
  const Rat shift = Rat(k) * half_b;
  if (a - shift <= 0) fail("a - k b / 2 > 0");
  return DelzantPolygon::certify(Polygon::from_vertices({
      {Rat(0), -half_b},
      {a + shift, -half_b},
      {a - shift, half_b},
      {Rat(0), half_b},
  }));
}

HalfPlane chop_half_plane(const VertexFrame& f, const Rat& eps) {
  // n solves <n, u1> = <n, u2> = 1 after dividing by det.
  const IVec n{f.u2.y - f.u1.y, f.u1.x - f.u2.x};
  const Rat offset = dot(n, f.vertex) + Rat(f.det) * eps;
  const auto [direction, g] = primitive(n);
  return {direction, offset / Rat(g)};
}

DelzantPolygon corner_chop(const DelzantPolygon& p, std::size_t vertex,
                           const Rat& eps) {
  if (vertex >= p.size()) {
    throw Error(ErrorCode::ParameterOutOfRange,
                "vertex index " + std::to_string(vertex) + " out of range");
  }
  if (eps <= 0) {
    throw Error(ErrorCode::NonPositiveParameter,
                "chop size " + to_string(eps) + " must be positive");
  }
  const VertexFrame& f = p.frames()[vertex];
  if (eps >= f.len1 || eps >= f.len2) {
    throw Error(ErrorCode::ChopTooLarge,
                "chop size " + to_string(eps) + " must be below incident edge "
                "lengths " + to_string(f.len1) + " and " + to_string(f.len2));
  }
  const auto chopped = clip(p.polygon(), chop_half_plane(f, eps));
  if (!chopped || chopped->size() != p.size() + 1) {
    throw Error(ErrorCode::ConvexityBroken,
                "chop does not add exactly one vertex");
  }
  return DelzantPolygon::certify(*chopped);
}

SlideInterval slide_interval(const DelzantPolygon& dp, std::size_t edge) {
  const Polygon& p = dp.polygon();
  if (edge >= p.size()) {
    throw Error(ErrorCode::ParameterOutOfRange,
                "edge index " + std::to_string(edge) + " out of range");
  }
  const auto e = idx(edge);
  const HalfPlane h = h_rep(p)[edge];
  const Vec2 d_prev = p.edge(e - 1);
  const Vec2 d_edge = p.edge(e);
  const Vec2 d_next = p.edge(e + 1);
  const Rat n_prev = dot(h.normal, d_prev);  // < 0
  const Rat n_next = dot(h.normal, d_next);  // > 0
  SlideInterval interval;
  tighten(interval, 1 / n_prev);
  tighten(interval, -1 / n_next);
  tighten(interval, (dot(d_next, d_edge) / n_next - dot(d_prev, d_edge) / n_prev) /
                        dot(d_edge, d_edge));
  return interval;
}

DelzantPolygon edge_slide(const DelzantPolygon& dp, std::size_t edge,
                          const Rat& t) {
  const SlideInterval interval = slide_interval(dp, edge);
  if (!interval.contains(t)) {
    throw Error(ErrorCode::SlideOutOfRange,
                "offset " + to_string(t) + " outside admissible interval " +
                    describe(interval));
  }
  if (t == 0) return dp;
  const Polygon& p = dp.polygon();
  const auto e = idx(edge);
  const HalfPlane h = h_rep(p)[edge];
  const Vec2 d_prev = p.edge(e - 1);
  const Vec2 d_next = p.edge(e + 1);
  std::vector<Point> v = p.vertices();
  const std::size_t n = v.size();
  v[edge] = v[edge] + (t / dot(h.normal, d_prev)) * d_prev;
  v[(edge + 1) % n] = v[(edge + 1) % n] + (t / dot(h.normal, d_next)) * d_next;
  return DelzantPolygon::certify(Polygon::from_vertices(std::move(v)));
}

std::optional<LatticeAffineMap> congruent(const DelzantPolygon& p,
                                          const DelzantPolygon& q) {
  if (p.size() != q.size()) return std::nullopt;
  if (congruence_fingerprint(p) != congruence_fingerprint(q)) return std::nullopt;

  // Any witness sends vertex 0 of p to some vertex of q, carrying its frame to
  // that vertex's frame (swapped when the witness reverses orientation).
  const VertexFrame& source = p.frames()[0];
  // det U = 1, so U^-1 = [[u2.y, -u2.x], [-u1.y, u1.x]].
  const Int i11 = source.u2.y, i12 = -source.u2.x;
  const Int i21 = -source.u1.y, i22 = source.u1.x;
  for (const VertexFrame& target : q.frames()) {
    for (const bool swap : {false, true}) {
      const IVec& w1 = swap ? target.u2 : target.u1;
      const IVec& w2 = swap ? target.u1 : target.u2;
      LatticeAffineMap m;
      m.a11 = w1.x * i11 + w2.x * i21;
      m.a12 = w1.x * i12 + w2.x * i22;
      m.a21 = w1.y * i11 + w2.y * i21;
      m.a22 = w1.y * i12 + w2.y * i22;
      m.c = target.vertex - m.apply_linear(source.vertex);
      if (apply_map(m, p.polygon()) == q.polygon()) return m;
    }
  }
  return std::nullopt;
}

CongruenceFingerprint congruence_fingerprint(const DelzantPolygon& p) {
  const Polygon& poly = p.polygon();
  const std::size_t n = poly.size();
  std::vector<Rat> lengths;
  lengths.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    lengths.push_back(rational_length(poly.vertex(idx(i)), poly.vertex(idx(i) + 1)));
  }
  std::vector<Rat> best;
  for (const bool reversed : {false, true}) {
    std::vector<Rat> seq = lengths;
    if (reversed) std::reverse(seq.begin(), seq.end());
    for (std::size_t r = 0; r < n; ++r) {
      if (best.empty() || seq < best) best = seq;
      std::rotate(seq.begin(), seq.begin() + 1, seq.end());
    }
  }
  return {n, area(poly), std::move(best)};
}

}  // namespace toric
