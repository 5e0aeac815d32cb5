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

#include "toric/moduli.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "toric/error.hpp"

namespace toric {

namespace {

std::ptrdiff_t idx(std::size_t i) { return static_cast<std::ptrdiff_t>(i); }

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

DelzantPolygon chop_at(const DelzantPolygon& p, const Point& vertex,
                       const Rat& eps) {
  const auto index = p.polygon().find_vertex(vertex);
  if (!index) {
    throw Error(ErrorCode::DecompositionFailed,
                "chop vertex (" + to_string(vertex.x) + ", " +
                    to_string(vertex.y) + ") not found");
  }
  return corner_chop(p, *index, eps);
}

struct Recognized {
  HirzebruchBase base;
  LatticeAffineMap witness;
};

// Tries all 8 placements of a vertex frame onto the coordinate axes and keeps
// the admissible trapezoid with the smallest (k, a).
std::optional<Recognized> recognize_hirzebruch(const DelzantPolygon& p) {
  std::optional<Recognized> best;
  for (const VertexFrame& f : p.frames()) {
    for (const bool swap : {false, true}) {
      const IVec& w1 = swap ? f.u2 : f.u1;
      const IVec& w2 = swap ? f.u1 : f.u2;
      // Inverse of the matrix with columns w1, w2 (determinant d = +-1).
      const Int d = cross(w1, w2);
      LatticeAffineMap m;
      m.a11 = d * w2.y;
      m.a12 = -d * w2.x;
      m.a21 = -d * w1.y;
      m.a22 = d * w1.x;
      m.c = Vec2{Rat(0), Rat(0)} - m.apply_linear(f.vertex);
      const Polygon q = apply_map(m, p.polygon());
      // Standard position shifted up by b/2: (0,0), (wb,0), (wt,b), (0,b).
      const auto& v = q.vertices();
      if (v.size() != 4 || v[0] != Point{Rat(0), Rat(0)} || v[1].y != 0 ||
          v[3].x != 0 || v[2].y != v[3].y) {
        continue;
      }
      const Rat b = v[3].y;
      const Rat slope = (v[1].x - v[2].x) / b;
      if (!is_integer(slope) || slope < 0) continue;
      const Rat a = (v[1].x + v[2].x) / 2;
      const Int k_big = num(slope);
      if (k_big > INT64_MAX) continue;
      const std::int64_t k = k_big.convert_to<std::int64_t>();
      if (!hirzebruch_admissible(a, b, k)) continue;
      if (best && std::tie(best->base.k, best->base.a) <= std::tie(k, a)) continue;
      LatticeAffineMap shift;
      shift.c = Vec2{Rat(0), -b / 2};
      best = Recognized{{a, b, k}, compose(shift, m)};
    }
  }
  return best;
}

std::optional<Unchop> smallest_unchop(const DelzantPolygon& p) {
  std::optional<Unchop> best;
  for (std::size_t e = 0; e < p.size(); ++e) {
    auto u = unchop(p, e);
    if (u && (!best || u->epsilon < best->epsilon)) best = std::move(u);
  }
  return best;
}

Rat lerp(const Rat& a, const Rat& b, const Rat& t) { return a + t * (b - a); }

Polygon sample_kind(const Translate& m, const Rat& t) {
  return translate(m.from.polygon(), t * m.offset);
}

Polygon sample_kind(const Scale& m, const Rat& t) {
  return scale(m.from.polygon(), lerp(m.start, m.end, t));
}

Polygon sample_kind(const EdgeSlide& m, const Rat& t) {
  return edge_slide(m.from, m.edge, lerp(m.start, m.end, t)).polygon();
}

Polygon sample_kind(const ChopHomotopy& m, const Rat& t) {
  if (t == 0) return m.from.polygon();
  return chop_at(m.from, m.vertex, t * m.epsilon).polygon();
}

Polygon sample_kind(const HirzebruchInterpolation& m, const Rat& t) {
  return hirzebruch(lerp(m.a0, m.a1, t), lerp(m.b0, m.b1, t), m.k).polygon();
}

Polygon sample_kind(const HirzebruchStep& m, const Rat& t) {
  const Rat half_b = m.b / 2;
  if (t <= Rat(1, 2)) {
    const DelzantPolygon h = hirzebruch(m.a, m.b, m.k);
    if (t == 0) return h.polygon();
    const Point top_right{m.a - Rat(m.k) * half_b, half_b};
    return chop_at(h, top_right, t * m.b).polygon();
  }
  const DelzantPolygon h = hirzebruch(m.a, m.b, m.k + 1);
  if (t == 1) return h.polygon();
  const Point bottom_right{m.a + Rat(m.k + 1) * half_b, -half_b};
  return chop_at(h, bottom_right, (1 - t) * m.b).polygon();
}

Polygon sample_kind(const SquareToTriangle& m, const Rat& t) {
  const Rat& l = m.lambda;
  if (t == 1) {
    return Polygon::from_vertices({{Rat(0), -l / 2}, {l, -l / 2}, {Rat(0), l / 2}});
  }
  const DelzantPolygon square = hirzebruch(l, l, 0);
  if (t == 0) return square.polygon();
  return chop_at(square, Point{l, l / 2}, t * l).polygon();
}

void check_unit(const Rat& t) {
  if (t < 0 || t > 1) {
    throw Error(ErrorCode::ParameterOutOfRange,
                "path parameter " + to_string(t) + " outside [0, 1]");
  }
}

void append_reversed(std::vector<Move>& out, std::vector<Move> moves) {
  std::reverse(moves.begin(), moves.end());
  for (Move& m : moves) {
    m.reversed = !m.reversed;
    out.push_back(std::move(m));
  }
}

std::vector<Move> hirzebruch_moves(const HirzebruchBase& from,
                                   const HirzebruchBase& to) {
  std::vector<Move> moves;
  if (from.k == to.k) {
    if (from.a != to.a || from.b != to.b) {
      moves.push_back({HirzebruchInterpolation{from.a, from.b, to.a, to.b, from.k}});
    }
    return moves;
  }
  // Widen first so that every intermediate k is admissible at height from.b.
  const std::int64_t k_max = std::max(from.k, to.k);
  const Rat wide = std::max(from.a, Rat(k_max) * from.b / 2 + from.b);
  if (wide != from.a) {
    moves.push_back({HirzebruchInterpolation{from.a, from.b, wide, from.b, from.k}});
  }
  if (from.k < to.k) {
    for (std::int64_t k = from.k; k < to.k; ++k) {
      moves.push_back({HirzebruchStep{wide, from.b, k}});
    }
  } else {
    for (std::int64_t k = from.k - 1; k >= to.k; --k) {
      moves.push_back({HirzebruchStep{wide, from.b, k}, true});
    }
  }
  if (wide != to.a || from.b != to.b) {
    moves.push_back({HirzebruchInterpolation{wide, from.b, to.a, to.b, to.k}});
  }
  return moves;
}

std::vector<Move> hirzebruch_to_triangle(const HirzebruchBase& from,
                                         const Rat& lambda) {
  std::vector<Move> moves = hirzebruch_moves(from, {lambda, lambda, 0});
  moves.push_back({SquareToTriangle{lambda}});
  const DelzantPolygon low = DelzantPolygon::certify(
      sample_kind(SquareToTriangle{lambda}, Rat(1)));
  moves.push_back({Translate{low, Vec2{Rat(0), lambda / 2}}});
  return moves;
}

std::vector<Move> base_moves(const Base& from, const Base& to) {
  return std::visit(
      Overloaded{
          [](const TriangleBase& a, const TriangleBase& b) {
            std::vector<Move> moves;
            if (a.lambda != b.lambda) {
              moves.push_back({Scale{delzant_triangle(Rat(1)), a.lambda, b.lambda}});
            }
            return moves;
          },
          [](const HirzebruchBase& a, const HirzebruchBase& b) {
            return hirzebruch_moves(a, b);
          },
          [](const HirzebruchBase& a, const TriangleBase& b) {
            return hirzebruch_to_triangle(a, b.lambda);
          },
          [](const TriangleBase& a, const HirzebruchBase& b) {
            std::vector<Move> moves;
            append_reversed(moves, hirzebruch_to_triangle(b, a.lambda));
            return moves;
          },
      },
      from, to);
}

// Forward chop homotopies from the base to the representative.
std::vector<Move> chop_moves(const Decomposition& d) {
  std::vector<Move> moves;
  DelzantPolygon current = base_polygon(d.base);
  for (const ChopStep& step : d.chops) {
    moves.push_back({ChopHomotopy{current, step.vertex, step.epsilon}});
    current = chop_at(current, step.vertex, step.epsilon);
  }
  return moves;
}

}  // namespace

DelzantPolygon base_polygon(const Base& base) {
  return std::visit(
      Overloaded{
          [](const TriangleBase& t) { return delzant_triangle(t.lambda); },
          [](const HirzebruchBase& h) { return hirzebruch(h.a, h.b, h.k); },
      },
      base);
}

std::string to_string(const Base& base) {
  return std::visit(
      Overloaded{
          [](const TriangleBase& t) {
            return "Triangle(lambda=" + to_string(t.lambda) + ")";
          },
          [](const HirzebruchBase& h) {
            return "Hirzebruch(a=" + to_string(h.a) + ", b=" + to_string(h.b) +
                   ", k=" + std::to_string(h.k) + ")";
          },
      },
      base);
}

DelzantPolygon replay(const Base& base, const std::vector<ChopStep>& chops) {
  DelzantPolygon current = base_polygon(base);
  for (const ChopStep& step : chops) {
    current = chop_at(current, step.vertex, step.epsilon);
  }
  return current;
}

std::optional<Unchop> unchop(const DelzantPolygon& dp, std::size_t edge) {
  const Polygon& p = dp.polygon();
  if (p.size() < 4 || edge >= p.size()) return std::nullopt;
  const auto e = idx(edge);
  const Vec2 d_prev = p.edge(e - 1);
  const Vec2 d_edge = p.edge(e);
  const Vec2 d_next = p.edge(e + 1);
  // w = v_e + s d_prev = v_{e+1} - s' d_next.
  const Rat denom = cross(d_prev, d_next);
  if (denom <= 0) return std::nullopt;
  const Rat s = cross(d_edge, d_next) / denom;
  const Rat s_next = cross(d_prev, d_edge) / denom;
  if (s <= 0 || s_next <= 0) return std::nullopt;
  const Point w = p.vertex(e) + s * d_prev;

  const Rat eps = rational_length(w, p.vertex(e));
  if (rational_length(w, p.vertex(e + 1)) != eps) return std::nullopt;

  std::vector<Point> vertices;
  vertices.reserve(p.size() - 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i == edge) {
      vertices.push_back(w);
    } else if (i != (edge + 1) % p.size()) {
      vertices.push_back(p.vertices()[i]);
    }
  }
  try {
    Polygon restored = Polygon::from_vertices(std::move(vertices));
    if (!validate(restored).is_delzant) return std::nullopt;
    return Unchop{DelzantPolygon::certify(std::move(restored)), eps, w};
  } catch (const Error&) {
    return std::nullopt;
  }
}

Decomposition canonicalize(const DelzantPolygon& p) {
  std::vector<Unchop> undone;
  DelzantPolygon current = p;
  const auto unchop_once = [&] {
    auto u = smallest_unchop(current);
    if (!u) {
      throw Error(ErrorCode::DecompositionFailed,
                  "no unchoppable edge on a " + std::to_string(current.size()) +
                      "-gon");
    }
    current = u->polygon;
    undone.push_back(*std::move(u));
  };
  while (current.size() > 4) unchop_once();

  Base base;
  LatticeAffineMap witness;
  std::optional<Recognized> trapezoid;
  if (current.size() == 4) trapezoid = recognize_hirzebruch(current);
  if (trapezoid) {
    base = trapezoid->base;
    witness = trapezoid->witness;
  } else {
    // A quadrilateral that is no admissible trapezoid is a chopped triangle.
    if (current.size() == 4) unchop_once();
    const Rat lambda = rational_length(current.vertex(0), current.vertex(1));
    const auto m = congruent(current, delzant_triangle(lambda));
    if (!m) {
      throw Error(ErrorCode::DecompositionFailed,
                  "triangle is not congruent to a Delzant triangle");
    }
    base = TriangleBase{lambda};
    witness = *m;
  }

  std::vector<ChopStep> chops;
  chops.reserve(undone.size());
  for (auto it = undone.rbegin(); it != undone.rend(); ++it) {
    chops.push_back({witness.apply(it->corner), it->epsilon});
  }
  DelzantPolygon representative = replay(base, chops);
  if (apply_map(witness, p.polygon()) != representative.polygon()) {
    throw Error(ErrorCode::DecompositionFailed,
                "replayed chops do not reproduce the mapped input");
  }
  return {witness, base, std::move(chops), std::move(representative)};
}

std::string move_name(const Move& m) {
  return std::visit(
      Overloaded{
          [](const Translate&) { return std::string("Translate"); },
          [](const Scale&) { return std::string("Scale"); },
          [](const EdgeSlide&) { return std::string("EdgeSlide"); },
          [](const ChopHomotopy&) { return std::string("ChopHomotopy"); },
          [](const HirzebruchInterpolation&) {
            return std::string("HirzebruchInterpolation");
          },
          [](const HirzebruchStep&) { return std::string("HirzebruchStep"); },
          [](const SquareToTriangle&) { return std::string("SquareToTriangle"); },
      },
      m.kind);
}

Polygon sample(const Move& m, const Rat& t) {
  check_unit(t);
  const Rat local = m.reversed ? 1 - t : t;
  return std::visit([&](const auto& kind) { return sample_kind(kind, local); },
                    m.kind);
}

Polygon sample(const Path& path, const Rat& t) {
  check_unit(t);
  if (path.moves.empty()) return path.source.polygon();
  const Rat count(static_cast<long long>(path.moves.size()));
  const Rat position = t * count;
  std::size_t i = floor(position).convert_to<std::size_t>();
  if (i == path.moves.size()) --i;
  return sample(path.moves[i], position - Rat(static_cast<long long>(i)));
}

Path base_path(const Base& from, const Base& to) {
  return {base_moves(from, to), base_polygon(from), base_polygon(to),
          std::nullopt, std::nullopt};
}

Path connect(const DelzantPolygon& p, const DelzantPolygon& q) {
  const Decomposition dp = canonicalize(p);
  const Decomposition dq = canonicalize(q);
  Path path{{}, dp.representative, dq.representative, dp.witness, dq.witness};
  if (dp.representative == dq.representative) return path;
  append_reversed(path.moves, chop_moves(dp));
  for (Move& m : base_moves(dp.base, dq.base)) path.moves.push_back(std::move(m));
  for (Move& m : chop_moves(dq)) path.moves.push_back(std::move(m));
  return path;
}

Rat continuity_modulus(const Path& path, std::size_t n) {
  if (n < 2) {
    throw Error(ErrorCode::ParameterOutOfRange,
                "continuity modulus needs at least 2 steps, got " +
                    std::to_string(n));
  }
  const Rat steps(static_cast<long long>(n));
  Rat worst = 0;
  Polygon previous = sample(path, Rat(0));
  for (std::size_t i = 1; i <= n; ++i) {
    Polygon current = sample(path, Rat(static_cast<long long>(i)) / steps);
    worst = std::max(worst, sym_diff_distance(previous, current));
    previous = std::move(current);
  }
  return worst;
}

DelzantPolygon cauchy_sequence(const Rat& c, const Rat& b, std::int64_t k,
                               std::int64_t n) {
  if (k == 1) {
    throw Error(ErrorCode::ConstraintViolation,
                "k = 1 gives no Cauchy counterexample");
  }
  if (c <= 0 || b <= 0) {
    throw Error(ErrorCode::ConstraintViolation, "c and b must be positive");
  }
  if (n < 1) {
    throw Error(ErrorCode::ConstraintViolation,
                "term index " + std::to_string(n) + " must be at least 1");
  }
  return hirzebruch(c / Rat(n) + b * Rat(k) / 2, b, k);
}

Polygon cauchy_limit(const Rat& b, std::int64_t k) {
  if (b <= 0 || k < 1) {
    throw Error(ErrorCode::ConstraintViolation,
                "limit triangle needs b > 0 and k >= 1");
  }
  return Polygon::from_vertices(
      {{Rat(0), -b / 2}, {b * Rat(k), -b / 2}, {Rat(0), b / 2}});
}

FloatPolygon q_delta(double eps) {
  if (!(eps > 0 && eps < 1)) {
    throw Error(ErrorCode::ParameterOutOfRange,
                "q_delta needs 0 < eps < 1, got " + std::to_string(eps));
  }
  const double delta = eps * (2 + std::sqrt(2.0)) / 4;
  return FloatPolygon::from_vertices({
      {0.0, -0.5},
      {1.0, -0.5},
      {1.0, 0.5 - delta / std::sqrt(2.0)},
      {1.0 - delta, 0.5},
      {0.0, 0.5},
  });
}

}  // namespace toric
