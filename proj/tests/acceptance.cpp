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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "toric/delzant.hpp"
#include "toric/error.hpp"
#include "toric/float_geometry.hpp"
#include "toric/geometry.hpp"
#include "toric/moduli.hpp"
#include "toric/resolve.hpp"

namespace {

using namespace toric;
namespace gen = toric::testing;

/// Collects the first few failure messages of a criterion.
class Check {
 public:
  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) messages_.push_back(what());
  }
  bool ok() const { return failures_ == 0; }
  std::size_t checks() const { return checks_; }
  std::string summary() const {
    std::string s = std::to_string(failures_) + " of " + std::to_string(checks_) + " checks failed";
    for (const std::string& m : messages_) s += "; " + m;
    return s;
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> messages_;
};

std::string str(const Rat& r) { return to_string(r); }

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(4);
  s << v;
  return s.str();
}

std::vector<Rat> sorted_sizes(const std::vector<ChopStep>& chops) {
  std::vector<Rat> out;
  for (const ChopStep& c : chops) out.push_back(c.epsilon);
  std::sort(out.begin(), out.end());
  return out;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

// 1. Metric axioms on a 200 x 200 distance matrix.
Outcome metric_suite() {
  gen::Rng rng(1001);
  std::vector<Polygon> ps;
  for (int i = 0; i < 200; ++i) ps.push_back(gen::random_delzant(rng).polygon.polygon());
  const std::size_t n = ps.size();
  std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n));
  Check c;
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = sym_diff_distance(ps[i], ps[i]);
    c.expect(d[i][i] == 0, [&] { return "d(P, P) != 0 at " + std::to_string(i); });
    for (std::size_t j = i + 1; j < n; ++j) {
      d[i][j] = sym_diff_distance(ps[i], ps[j]);
      d[j][i] = sym_diff_distance(ps[j], ps[i]);
      c.expect(d[i][j] == d[j][i], [&] { return "asymmetric pair " + std::to_string(i); });
      c.expect((d[i][j] == 0) == (ps[i] == ps[j]),
               [&] { return "identity fails at " + std::to_string(i); });
    }
  }
  // Independent oracle on a sample of pairs, so the axioms are not checked
  // against a consistently wrong function.
  for (std::size_t i = 0; i + 1 < n; i += 4) {
    c.expect(d[i][i + 1] == oracle::sym_diff(ps[i], ps[i + 1]),
             [&] { return "oracle mismatch at " + std::to_string(i); });
  }
  std::size_t triples = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        ++triples;
        if (d[i][k] > d[i][j] + d[j][k]) {
          c.expect(false, [&] {
            return "triangle inequality fails at (" + std::to_string(i) + ", " +
                   std::to_string(j) + ", " + std::to_string(k) + ")";
          });
        }
      }
    }
  }
  return {c.ok(), std::to_string(n) + " polygons, " + std::to_string(triples) +
                      " triples; " + c.summary()};
}

// 2. Exact d against a seeded hit-or-miss estimate.
Outcome oracle_agreement() {
  gen::Rng rng(2002);
  Check c;
  double worst = 0;
  for (int i = 0; i < 50; ++i) {
    const Polygon p = gen::random_delzant(rng).polygon.polygon();
    const Polygon q = gen::random_delzant(rng).polygon.polygon();
    const double exact = to_double(sym_diff_distance(p, q));
    const oracle::Estimate e = oracle::monte_carlo_sym_diff(p, q, 77 + i, 1000000);
    const double z = e.sigma > 0 ? std::abs(exact - e.value) / e.sigma : 0;
    worst = std::max(worst, z);
    c.expect(std::abs(exact - e.value) <= 4 * e.sigma + 1e-12, [&] {
      return "pair " + std::to_string(i) + ": exact " + fmt(exact) + " vs " + fmt(e.value) +
             " +- " + fmt(e.sigma);
    });
  }
  return {c.ok(), "50 pairs, worst deviation " + fmt(worst) + " sigma; " + c.summary()};
}

// 3. Simultaneous AGL(2, Z) images.
Outcome agl_invariance() {
  gen::Rng rng(3003);
  Check c;
  for (int i = 0; i < 100; ++i) {
    const DelzantPolygon p = gen::random_delzant(rng).polygon;
    const DelzantPolygon q = gen::random_delzant(rng).polygon;
    const LatticeAffineMap m = gen::random_agl(rng);
    const DelzantPolygon mp = gen::mapped(m, p), mq = gen::mapped(m, q);
    const auto tag = [i] { return "case " + std::to_string(i); };
    c.expect(area(mp.polygon()) == area(p.polygon()), tag);
    c.expect(sym_diff_distance(mp.polygon(), mq.polygon()) ==
                 sym_diff_distance(p.polygon(), q.polygon()),
             tag);
    c.expect(congruence_fingerprint(mp) == congruence_fingerprint(p), tag);
    c.expect(congruence_fingerprint(mq) == congruence_fingerprint(q), tag);
  }
  return {c.ok(), "100 triples (m, P, Q); " + c.summary()};
}

// 4. Chop area law and exact inversion.
Outcome chop_law() {
  gen::Rng rng(4004);
  Check c;
  for (int i = 0; i < 200; ++i) {
    const DelzantPolygon p = gen::random_delzant(rng).polygon;
    const auto v = static_cast<std::size_t>(
        gen::uniform_int(rng, 0, static_cast<std::int64_t>(p.size()) - 1));
    const VertexFrame& f = p.frames()[v];
    const Rat eps = std::min(f.len1, f.len2) * Rat(gen::uniform_int(rng, 1, 7), 8);
    const DelzantPolygon chopped = corner_chop(p, v, eps);
    const auto tag = [&] { return "case " + std::to_string(i) + " eps " + str(eps); };
    c.expect(area(p.polygon()) - area(chopped.polygon()) == eps * eps / 2, tag);

    const Point a = f.vertex + eps * Vec2{Rat(f.u1.x), Rat(f.u1.y)};
    const Point b = f.vertex + eps * Vec2{Rat(f.u2.x), Rat(f.u2.y)};
    std::optional<std::size_t> edge;
    const auto& vs = chopped.polygon().vertices();
    for (std::size_t e = 0; e < vs.size(); ++e) {
      const Point& s = vs[e];
      const Point& t = vs[(e + 1) % vs.size()];
      if ((s == a && t == b) || (s == b && t == a)) edge = e;
    }
    c.expect(edge.has_value(), tag);
    if (!edge) continue;
    const std::optional<Unchop> u = unchop(chopped, *edge);
    c.expect(u.has_value(), tag);
    if (!u) continue;
    c.expect(u->polygon == p, tag);
    c.expect(u->epsilon == eps, tag);
    c.expect(u->corner == f.vertex, tag);
  }
  return {c.ok(), "200 chops; " + c.summary()};
}

Polygon poly(std::initializer_list<std::pair<Rat, Rat>> vs) {
  std::vector<Point> pts;
  for (const auto& [x, y] : vs) pts.push_back({x, y});
  return Polygon::from_vertices(std::move(pts));
}

// 5. Smoothing battery.
Outcome resolution() {
  const Rat h(1, 2);
  const std::vector<std::pair<std::string, Polygon>> battery{
      {"limit triangle", poly({{0, -h}, {2, -h}, {0, h}})},
      {"defect 3 triangle", poly({{0, 0}, {3, 0}, {0, 1}})},
      {"defects 2 and 5", poly({{0, 0}, {5, 0}, {0, 2}})},
      {"weighted quadrilateral", poly({{0, 0}, {3, 0}, {3, 1}, {1, 2}})},
      {"off-lattice kite", poly({{Rat(1, 3), 0}, {Rat(7, 3), 0}, {Rat(4, 3), Rat(3, 2)}})},
      {"hexagon", poly({{0, 0}, {2, 0}, {4, 1}, {4, 2}, {1, 3}, {0, 2}})},
  };
  Check c;
  std::size_t smoothed = 0;
  for (const auto& [name, p] : battery) {
    const DelzantReport r = validate(p);
    c.expect(!r.is_delzant && !r.non_smooth_vertices.empty(),
             [&] { return name + " is already smooth"; });
    Int bound = 0;
    for (const NonSmoothVertex& v : r.non_smooth_vertices) bound += v.defect - 1;
    Rat previous = -1;
    for (int j = 3; j <= 10; ++j) {
      const Rat eps(Int(1), Int(1) << j);
      const Smoothing s = smooth(p, eps);
      ++smoothed;
      const Polygon& out = s.polygon.polygon();
      const auto tag = [&] { return name + " at 2^-" + std::to_string(j); };
      c.expect(validate(out).is_delzant, tag);
      c.expect(contains(p, out), tag);
      c.expect(out.size() - p.size() <= static_cast<std::size_t>(bound), tag);
      c.expect(Int(s.added_edges) <= bound && s.edge_bound == bound, tag);
      const Rat d = sym_diff_distance(p, out);
      c.expect(d == s.loss && d > 0, tag);
      if (previous >= 0) c.expect(d < previous, tag);
      previous = d;
    }
  }
  return {c.ok(), std::to_string(battery.size()) + " polygons, " + std::to_string(smoothed) +
                      " smoothings; " + c.summary()};
}

// 6. canonicalize against the known construction.
Outcome classification() {
  gen::Rng rng(6006);
  Check c;
  std::size_t triangles = 0;
  for (int i = 0; i < 100; ++i) {
    const gen::GeneratedPolygon g = gen::random_delzant(rng);
    if (std::holds_alternative<TriangleBase>(g.base)) ++triangles;
    const auto tag = [&] { return "case " + std::to_string(i) + " " + to_string(g.base); };
    try {
      const Decomposition d = canonicalize(g.polygon);
      c.expect(d.base == g.base, tag);
      c.expect(sorted_sizes(d.chops) == sorted_sizes(g.chops), tag);
      c.expect(replay(d.base, d.chops) == d.representative, tag);
      c.expect(sym_diff_distance(apply_map(d.witness, g.polygon.polygon()),
                                 d.representative.polygon()) == 0,
               tag);
    } catch (const Error& e) {
      c.expect(false, [&] { return tag() + ": " + e.what(); });
    }
  }
  return {c.ok(), "100 polygons (" + std::to_string(triangles) + " triangle bases); " +
                      c.summary()};
}

// 7. connect paths.
Outcome path_connectedness() {
  gen::Rng rng(7007);
  Check c;
  Rat worst_1000 = 0;
  for (int i = 0; i < 25; ++i) {
    const DelzantPolygon p = gen::random_delzant(rng, 3).polygon;
    const DelzantPolygon q = gen::random_delzant(rng, 3).polygon;
    const auto tag = [&] { return "pair " + std::to_string(i); };
    const Path path = connect(p, q);
    const Polygon rep_p = canonicalize(p).representative.polygon();
    const Polygon rep_q = canonicalize(q).representative.polygon();
    c.expect(sample(path, Rat(0)) == rep_p, tag);
    c.expect(sample(path, Rat(1)) == rep_q, tag);
    for (int s = 0; s <= 1000; ++s) {
      const Polygon x = sample(path, Rat(s, 1000));
      c.expect(validate(x).is_delzant,
               [&] { return tag() + " sample " + std::to_string(s) + " not Delzant"; });
    }
    const Rat m10 = continuity_modulus(path, 10);
    const Rat m100 = continuity_modulus(path, 100);
    const Rat m1000 = continuity_modulus(path, 1000);
    c.expect(m10 > m100 && m100 > m1000, [&] {
      return tag() + " modulus " + str(m10) + ", " + str(m100) + ", " + str(m1000);
    });
    worst_1000 = std::max(worst_1000, m1000);
  }
  return {c.ok(), "25 paths, 25025 samples, max modulus(1000) " + fmt(to_double(worst_1000)) +
                      "; " + c.summary()};
}

// 8. Cauchy family and its non-Delzant limit.
Outcome non_completeness() {
  const Rat cc(1), b(1);
  const std::int64_t k = 2;
  Check c;
  std::vector<Polygon> a{cauchy_sequence(cc, b, k, 1).polygon()};  // a[0] is unused
  for (int n = 1; n <= 50; ++n) a.push_back(cauchy_sequence(cc, b, k, n).polygon());
  for (int n = 1; n <= 50; ++n) {
    for (int m = 1; m <= 50; ++m) {
      const Rat expected = b * cc * abs(Rat(1, n) - Rat(1, m));
      c.expect(sym_diff_distance(a[n], a[m]) == expected, [&] {
        return "d(A_" + std::to_string(n) + ", A_" + std::to_string(m) + ")";
      });
    }
  }
  const Polygon limit = cauchy_limit(b, k);
  const DelzantReport r = validate(limit);
  c.expect(!r.is_delzant, [] { return "limit passes validate"; });
  c.expect(r.non_smooth_vertices.size() == 1, [] { return "expected one bad vertex"; });
  std::string where;
  if (r.non_smooth_vertices.size() == 1) {
    const NonSmoothVertex& v = r.non_smooth_vertices.front();
    const Point& at = limit.vertices()[v.index];
    where = "(" + str(at.x) + ", " + str(at.y) + ") defect " + v.defect.str();
    c.expect(at == Point{Rat(0), Rat(1, 2)} && v.defect == 2, [&] { return where; });
  }
  return {c.ok(), "2500 pairs; limit non-smooth at " + where + "; " + c.summary()};
}

struct DiscRun {
  double eps;
  DelzantPolygon polygon;
};

std::vector<DiscRun>& disc_runs() {
  static std::vector<DiscRun> runs;
  return runs;
}

// 9. Approximating the unit disc, and rationalizing an irrational slope.
Outcome completion_chain() {
  const SupportOracle disc = SupportOracle::disc(0, 0, 1);
  Check c;
  std::string detail;
  for (const double eps : {0.2, 0.1, 0.05}) {
    const DelzantApproximation a = delzant_approximate(disc, eps);
    disc_runs().push_back({eps, a.polygon});
    const FloatPolygon fp = to_float(a.polygon.polygon());
    const FloatBox box = union_box(disc.bounding_box, fp.bounding_box());
    const AreaEstimate e = estimate_sym_diff(disc.contains, indicator(fp), box, 9009, 1000000);
    const double upper = e.value + 1.6449 * e.sigma;
    c.expect(validate(a.polygon.polygon()).is_delzant, [&] { return "not Delzant"; });
    c.expect(upper <= eps, [&] { return "eps " + fmt(eps) + " estimate " + fmt(upper); });
    detail += "eps " + fmt(eps) + ": " + std::to_string(a.polygon.size()) + " edges, d <= " +
              fmt(upper) + "; ";
  }
  const double r2 = std::sqrt(2.0);
  const FloatPolygon slanted = FloatPolygon::from_vertices({{0, 0}, {2, 0}, {3, r2}, {1, r2}});
  const Rationalization rat = rationalize(slanted, 1e-3);
  const double d = sym_diff_area(to_float(rat.polygon), slanted);
  c.expect(d <= 1e-3, [&] { return "rationalize distance " + fmt(d); });
  c.expect(validate(rat.polygon).is_rational, [] { return "rationalize not rational"; });
  detail += "slope sqrt(2) rationalized to d " + fmt(d) + " at depth " +
            std::to_string(rat.depth) + "; ";
  return {c.ok(), detail + c.summary()};
}

bool monotone(const std::vector<double>& xs) {
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (xs[i] > xs[i - 1] + 1e-9) return false;
  }
  return true;
}

// 10. d and d_H along the families of criteria 8 and 9.
Outcome hausdorff_consistency() {
  Check c;
  std::vector<double> d, dh;
  const Polygon limit = cauchy_limit(Rat(1), 2);
  for (int n = 1; n <= 1024; n *= 2) {
    const Polygon a = cauchy_sequence(Rat(1), Rat(1), 2, n).polygon();
    d.push_back(to_double(sym_diff_distance(a, limit)));
    dh.push_back(hausdorff(a, limit));
  }
  c.expect(monotone(d) && monotone(dh), [] { return "Cauchy family not monotone"; });
  c.expect(d.back() < 1e-3 && dh.back() < 1e-3, [] { return "Cauchy family not converging"; });
  std::string detail = "Cauchy n = 1..1024: d " + fmt(d.front()) + " -> " + fmt(d.back()) +
                       ", d_H " + fmt(dh.front()) + " -> " + fmt(dh.back()) + "; ";

  if (disc_runs().empty()) completion_chain();
  const SupportOracle disc = SupportOracle::disc(0, 0, 1);
  // A circumscribed regular 2^16-gon stands in for the disc; its own area
  // excess is below 3e-9.
  std::vector<FloatPoint> ring;
  const std::size_t sides = 1 << 16;
  const double radius = 1 / std::cos(std::numbers::pi / sides);
  for (std::size_t i = 0; i < sides; ++i) {
    const double theta = 2 * std::numbers::pi * (static_cast<double>(i) + 0.5) / sides;
    ring.push_back({radius * std::cos(theta), radius * std::sin(theta)});
  }
  const FloatPolygon fine = FloatPolygon::from_vertices(std::move(ring));
  std::vector<double> dd, ddh;
  for (const DiscRun& r : disc_runs()) {
    const FloatPolygon fp = to_float(r.polygon.polygon());
    dd.push_back(sym_diff_area(fine, fp));
    ddh.push_back(hausdorff(disc, fp, 1 << 14));
  }
  c.expect(monotone(dd) && monotone(ddh), [] { return "disc family not monotone"; });
  c.expect(dd.back() <= disc_runs().back().eps, [] { return "disc d above eps"; });
  c.expect(ddh.back() < ddh.front(), [] { return "disc d_H not shrinking"; });
  detail += "disc eps 0.2..0.05: d " + fmt(dd.front()) + " -> " + fmt(dd.back()) + ", d_H " +
            fmt(ddh.front()) + " -> " + fmt(ddh.back()) + "; ";
  return {c.ok(), detail + c.summary()};
}

struct Criterion {
  int id;
  const char* name;
  Outcome (*run)();
  double limit_seconds;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "metric suite", metric_suite, 60},
      {2, "oracle agreement", oracle_agreement, 120},
      {3, "AGL invariance", agl_invariance, 0},
      {4, "chop law", chop_law, 0},
      {5, "resolution", resolution, 0},
      {6, "classification round trip", classification, 0},
      {7, "path-connectedness", path_connectedness, 0},
      {8, "non-completeness", non_completeness, 0},
      {9, "completion chain", completion_chain, 120},
      {10, "Hausdorff consistency", hausdorff_consistency, 0},
  };
  int failed = 0;
  for (const Criterion& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.limit_seconds > 0 && seconds >= cr.limit_seconds) {
      o.pass = false;
      o.detail += "; over the " + fmt(cr.limit_seconds) + " s budget";
    }
    if (!o.pass) ++failed;
    std::printf("%s criterion %d (%s) [%.1f s]: %s\n", o.pass ? "PASS" : "FAIL", cr.id,
                cr.name, seconds, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
