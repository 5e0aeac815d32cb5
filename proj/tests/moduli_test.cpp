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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "toric/error.hpp"
#include "toric/moduli.hpp"

namespace toric {
namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no toric::Error thrown";
  return ErrorCode::InvariantViolation;
}

std::vector<Rat> sorted_sizes(const std::vector<ChopStep>& chops) {
  std::vector<Rat> s;
  for (const ChopStep& c : chops) s.push_back(c.epsilon);
  std::sort(s.begin(), s.end());
  return s;
}

void expect_path_delzant(const Path& path, int samples) {
  for (int i = 0; i <= samples; ++i) {
    const Polygon p = sample(path, Rat(i, samples));
    EXPECT_TRUE(oracle::delzant(p)) << "t = " << i << "/" << samples;
  }
}

TEST(Unchop, InvertsTriangleChop) {
  const DelzantPolygon t = delzant_triangle(Rat(2));
  const DelzantPolygon c = corner_chop(t, 0, Rat(1, 2));
  int found = 0;
  for (std::size_t e = 0; e < c.size(); ++e) {
    if (const auto u = unchop(c, e)) {
      ++found;
      EXPECT_EQ(u->polygon, t);
      EXPECT_EQ(u->epsilon, Rat(1, 2));
      EXPECT_EQ(u->corner, (Point{Rat(0), Rat(0)}));
    }
  }
  EXPECT_EQ(found, 1);
}

TEST(Unchop, SquareHasNoUnchoppableEdge) {
  const DelzantPolygon sq = hirzebruch(Rat(1), Rat(1), 0);
  for (std::size_t e = 0; e < 4; ++e) EXPECT_FALSE(unchop(sq, e).has_value());
}

TEST(Unchop, TriangleIsNeverUnchopped) {
  const DelzantPolygon t = delzant_triangle(Rat(1));
  for (std::size_t e = 0; e < 3; ++e) EXPECT_FALSE(unchop(t, e).has_value());
}

TEST(Unchop, DoubleRoundTrip) {
  const DelzantPolygon h = hirzebruch(Rat(3), Rat(2), 1);
  const DelzantPolygon once = corner_chop(h, 0, Rat(1, 3));
  const DelzantPolygon twice = corner_chop(once, 2, Rat(1, 5));
  std::optional<Unchop> back;
  for (std::size_t e = 0; e < twice.size() && !back; ++e) {
    auto u = unchop(twice, e);
    if (u && u->epsilon == Rat(1, 5)) back = u;
  }
  ASSERT_TRUE(back);
  EXPECT_EQ(back->polygon, once);
  std::optional<Unchop> base;
  for (std::size_t e = 0; e < once.size() && !base; ++e) {
    auto u = unchop(once, e);
    if (u && u->epsilon == Rat(1, 3)) base = u;
  }
  ASSERT_TRUE(base);
  EXPECT_EQ(base->polygon, h);
}

TEST(Unchop, RandomChopsAreInverted) {
  testing::Rng rng(41);
  for (int i = 0; i < 100; ++i) {
    const DelzantPolygon p = testing::random_delzant(rng, 3).polygon;
    const auto v = static_cast<std::size_t>(
        testing::uniform_int(rng, 0, static_cast<std::int64_t>(p.size()) - 1));
    const VertexFrame& f = p.frames()[v];
    const Rat eps = std::min(f.len1, f.len2) * Rat(testing::uniform_int(rng, 1, 7), 8);
    const DelzantPolygon c = corner_chop(p, v, eps);
    bool inverted = false;
    for (std::size_t e = 0; e < c.size(); ++e) {
      const auto u = unchop(c, e);
      if (u && u->corner == f.vertex) {
        inverted = u->polygon == p && u->epsilon == eps;
      }
    }
    EXPECT_TRUE(inverted);
  }
}

TEST(Canonicalize, TriangleUnderRandomMap) {
  testing::Rng rng(42);
  const DelzantPolygon t = delzant_triangle(Rat(2));
  const DelzantPolygon q = testing::mapped(testing::random_agl(rng), t);
  const Decomposition d = canonicalize(q);
  EXPECT_EQ(d.base, Base(TriangleBase{Rat(2)}));
  EXPECT_TRUE(d.chops.empty());
  EXPECT_EQ(apply_map(d.witness, q.polygon()), t.polygon());
}

TEST(Canonicalize, ChoppedTrapezoid) {
  testing::Rng rng(43);
  const DelzantPolygon h = hirzebruch(Rat(3), Rat(2), 1);
  const DelzantPolygon c = corner_chop(h, 2, Rat(1, 4));
  const DelzantPolygon q = testing::mapped(testing::random_agl(rng), c);
  const Decomposition d = canonicalize(q);
  EXPECT_EQ(d.base, Base(HirzebruchBase{Rat(3), Rat(2), 1}));
  ASSERT_EQ(d.chops.size(), 1u);
  EXPECT_EQ(d.chops[0].epsilon, Rat(1, 4));
  EXPECT_EQ(replay(d.base, d.chops), d.representative);
}

TEST(Canonicalize, SquareIsItsOwnBase) {
  const Decomposition d = canonicalize(hirzebruch(Rat(1), Rat(1), 0));
  EXPECT_EQ(d.base, Base(HirzebruchBase{Rat(1), Rat(1), 0}));
  EXPECT_TRUE(d.chops.empty());
}

TEST(Canonicalize, SlimFirstHirzebruchBecomesChoppedTriangle) {
  // A triangle chopped by less than a third of its side is an F1 trapezoid
  // with a < b, which is not an admissible base.
  const DelzantPolygon c = corner_chop(delzant_triangle(Rat(3)), 2, Rat(1, 2));
  const Decomposition d = canonicalize(c);
  EXPECT_EQ(d.base, Base(TriangleBase{Rat(3)}));
  ASSERT_EQ(d.chops.size(), 1u);
  EXPECT_EQ(d.chops[0].epsilon, Rat(1, 2));
}

TEST(Canonicalize, RandomRoundTripsAndEquivariance) {
  testing::Rng rng(44);
  for (int i = 0; i < 60; ++i) {
    const testing::GeneratedPolygon g = testing::random_delzant(rng);
    const Decomposition d = canonicalize(g.polygon);
    EXPECT_EQ(d.base, g.base) << to_string(d.base) << " vs " << to_string(g.base);
    EXPECT_EQ(sorted_sizes(d.chops), sorted_sizes(g.chops));
    EXPECT_EQ(replay(d.base, d.chops), d.representative);
    EXPECT_EQ(apply_map(d.witness, g.polygon.polygon()), d.representative.polygon());
    const Decomposition moved =
        canonicalize(testing::mapped(testing::random_agl(rng), g.polygon));
    EXPECT_EQ(moved.base, d.base);
    EXPECT_EQ(sorted_sizes(moved.chops), sorted_sizes(d.chops));
  }
}

TEST(Moves, ChopHomotopyMidpointDistance) {
  const DelzantPolygon t = delzant_triangle(Rat(2));
  const Move m{ChopHomotopy{t, Point{Rat(0), Rat(0)}, Rat(1)}};
  EXPECT_EQ(sample(m, Rat(0)), t.polygon());
  EXPECT_EQ(sym_diff_distance(sample(m, Rat(1, 2)), t.polygon()), Rat(1, 8));
  EXPECT_EQ(code_of([&] { sample(m, Rat(3, 2)); }), ErrorCode::ParameterOutOfRange);
}

TEST(Moves, SquareToTriangleEndpointsAndMidpoint) {
  const Move m{SquareToTriangle{Rat(1)}};
  EXPECT_EQ(sample(m, Rat(0)), hirzebruch(Rat(1), Rat(1), 0).polygon());
  const Polygon end = sample(m, Rat(1));
  EXPECT_TRUE(congruent(DelzantPolygon::certify(end), delzant_triangle(Rat(1))));
  const Polygon mid = sample(m, Rat(1, 2));
  EXPECT_EQ(mid, corner_chop(hirzebruch(Rat(1), Rat(1), 0), 2, Rat(1, 2)).polygon());
}

TEST(Moves, HirzebruchStepPassesThroughPentagon) {
  const Move m{HirzebruchStep{Rat(2), Rat(1), 1}};
  EXPECT_EQ(sample(m, Rat(0)), hirzebruch(Rat(2), Rat(1), 1).polygon());
  EXPECT_EQ(sample(m, Rat(1)), hirzebruch(Rat(2), Rat(1), 2).polygon());
  const Polygon mid = sample(m, Rat(1, 2));
  EXPECT_EQ(mid.size(), 5u);
  EXPECT_TRUE(mid.find_vertex({Rat(2), Rat(0)}));
  for (int i = 0; i <= 40; ++i) EXPECT_TRUE(oracle::delzant(sample(m, Rat(i, 40))));
}

TEST(Moves, ReversedSwapsEndpoints) {
  const Move m{HirzebruchStep{Rat(2), Rat(1), 1}, true};
  EXPECT_EQ(sample(m, Rat(0)), hirzebruch(Rat(2), Rat(1), 2).polygon());
  EXPECT_EQ(sample(m, Rat(1)), hirzebruch(Rat(2), Rat(1), 1).polygon());
}

TEST(BasePath, TrianglesScale) {
  const Path p = base_path(TriangleBase{Rat(1)}, TriangleBase{Rat(2)});
  ASSERT_EQ(p.moves.size(), 1u);
  EXPECT_EQ(move_name(p.moves[0]), "Scale");
  EXPECT_EQ(sample(p, Rat(0)), delzant_triangle(Rat(1)).polygon());
  EXPECT_EQ(sample(p, Rat(1)), delzant_triangle(Rat(2)).polygon());
  // Nested triangles: d is the area difference (s^2 - t^2) / 2 at scales s > t.
  const Rat s(7, 4), t(5, 4);
  EXPECT_EQ(sym_diff_distance(sample(p, Rat(3, 4)), sample(p, Rat(1, 4))),
            (s * s - t * t) / 2);
}

TEST(BasePath, HirzebruchStepOnly) {
  const Path p = base_path(HirzebruchBase{Rat(2), Rat(1), 1},
                           HirzebruchBase{Rat(2), Rat(1), 2});
  ASSERT_EQ(p.moves.size(), 1u);
  EXPECT_EQ(move_name(p.moves[0]), "HirzebruchStep");
  expect_path_delzant(p, 100);
}

TEST(BasePath, SquareToTriangle) {
  const Path p = base_path(HirzebruchBase{Rat(1), Rat(1), 0}, TriangleBase{Rat(1)});
  EXPECT_EQ(sample(p, Rat(0)), hirzebruch(Rat(1), Rat(1), 0).polygon());
  EXPECT_EQ(sample(p, Rat(1)), delzant_triangle(Rat(1)).polygon());
  expect_path_delzant(p, 100);
}

TEST(BasePath, WideJumpsInK) {
  const Path up = base_path(HirzebruchBase{Rat(1), Rat(1), 0},
                            HirzebruchBase{Rat(5, 2), Rat(1, 2), 3});
  const Path down = base_path(HirzebruchBase{Rat(5, 2), Rat(1, 2), 3},
                              TriangleBase{Rat(2, 3)});
  for (const Path* p : {&up, &down}) {
    expect_path_delzant(*p, 200);
    for (std::size_t i = 0; i + 1 < p->moves.size(); ++i) {
      EXPECT_EQ(sample(p->moves[i], Rat(1)), sample(p->moves[i + 1], Rat(0)));
    }
  }
}

TEST(Connect, SamePolygonGivesConstantPath) {
  const DelzantPolygon h = hirzebruch(Rat(2), Rat(1), 0);
  const Path p = connect(h, h);
  EXPECT_TRUE(p.moves.empty());
  EXPECT_EQ(sample(p, Rat(1, 3)), p.source.polygon());
  EXPECT_EQ(continuity_modulus(p, 10), Rat(0));
}

TEST(Connect, TrianglesAreOneScale) {
  const Path p = connect(delzant_triangle(Rat(1)), delzant_triangle(Rat(2)));
  ASSERT_EQ(p.moves.size(), 1u);
  EXPECT_EQ(sample(p, Rat(0)), delzant_triangle(Rat(1)).polygon());
  EXPECT_EQ(sample(p, Rat(1)), delzant_triangle(Rat(2)).polygon());
}

TEST(Connect, ChoppedTrapezoidToTriangle) {
  const DelzantPolygon c = corner_chop(hirzebruch(Rat(2), Rat(1), 0), 1, Rat(1, 4));
  const Path p = connect(c, delzant_triangle(Rat(1)));
  EXPECT_EQ(sample(p, Rat(0)), p.source.polygon());
  EXPECT_EQ(sample(p, Rat(1)), p.target.polygon());
  EXPECT_EQ(apply_map(*p.source_witness, c.polygon()), p.source.polygon());
  expect_path_delzant(p, 100);
}

TEST(Connect, RandomPairsAreContinuousAndDelzant) {
  testing::Rng rng(45);
  for (int i = 0; i < 6; ++i) {
    const auto a = testing::random_delzant(rng, 3).polygon;
    const auto b = testing::random_delzant(rng, 3).polygon;
    const Path p = connect(a, b);
    EXPECT_EQ(sample(p, Rat(0)), p.source.polygon());
    EXPECT_EQ(sample(p, Rat(1)), p.target.polygon());
    for (std::size_t j = 0; j + 1 < p.moves.size(); ++j) {
      EXPECT_EQ(sample(p.moves[j], Rat(1)), sample(p.moves[j + 1], Rat(0)));
    }
    expect_path_delzant(p, 100);
    EXPECT_LT(continuity_modulus(p, 100), continuity_modulus(p, 10));
  }
}

TEST(ContinuityModulus, ChopHomotopyQuarterSteps) {
  const DelzantPolygon t = delzant_triangle(Rat(2));
  const Path p{{Move{ChopHomotopy{t, Point{Rat(0), Rat(0)}, Rat(1, 2)}}},
               t,
               corner_chop(t, 0, Rat(1, 2)),
               std::nullopt,
               std::nullopt};
  EXPECT_EQ(continuity_modulus(p, 4), Rat(7, 128));
  EXPECT_EQ(code_of([&] { continuity_modulus(p, 1); }), ErrorCode::ParameterOutOfRange);
}

TEST(Cauchy, FirstTermAndDistanceLaw) {
  EXPECT_EQ(cauchy_sequence(Rat(1), Rat(1), 2, 1), hirzebruch(Rat(2), Rat(1), 2));
  for (std::int64_t n = 1; n <= 6; ++n) {
    for (std::int64_t m = 1; m <= 6; ++m) {
      const Rat d = oracle::sym_diff(cauchy_sequence(Rat(1), Rat(1), 2, n).polygon(),
                                     cauchy_sequence(Rat(1), Rat(1), 2, m).polygon());
      EXPECT_EQ(d, abs(Rat(1, n) - Rat(1, m)));
    }
  }
  EXPECT_EQ(code_of([] { cauchy_sequence(Rat(1), Rat(1), 1, 1); }),
            ErrorCode::ConstraintViolation);
}

TEST(Cauchy, LimitIsNotDelzant) {
  const Polygon limit = cauchy_limit(Rat(1), 2);
  const DelzantReport r = validate(limit);
  EXPECT_FALSE(r.is_delzant);
  ASSERT_EQ(r.non_smooth_vertices.size(), 1u);
  EXPECT_EQ(limit.vertices()[r.non_smooth_vertices[0].index], (Point{Rat(0), Rat(1, 2)}));
  EXPECT_EQ(r.non_smooth_vertices[0].defect, Int(2));
  // The terms converge to the limit vertex-wise and in d.
  EXPECT_EQ(sym_diff_distance(cauchy_sequence(Rat(1), Rat(1), 2, 10).polygon(), limit),
            Rat(1, 10));
}

TEST(QDelta, ConvexIrrationalAndClose) {
  const FloatPolygon q = q_delta(0.1);
  EXPECT_EQ(q.size(), 5u);
  const auto hs = h_rep(q);
  EXPECT_EQ(std::count_if(hs.begin(), hs.end(),
                          [](const FloatEdgeConstraint& h) { return !h.rational_slope; }),
            1);
  const double d = sym_diff_area(to_float(hirzebruch(Rat(1), Rat(1), 0).polygon()), q);
  EXPECT_LE(d, 0.05);
  EXPECT_GT(d, 0.0);
  EXPECT_EQ(code_of([] { q_delta(1.5); }), ErrorCode::ParameterOutOfRange);
}

}  // namespace
}  // namespace toric
