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

#include "delzant_cli/commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>

#include "delzant_cli/document.hpp"
#include "delzant_cli/svg.hpp"
#include "toric/delzant.hpp"
#include "toric/error.hpp"
#include "toric/moduli.hpp"
#include "toric/resolve.hpp"

namespace delzant_cli {

namespace {

using toric::DelzantPolygon;
using toric::FloatPolygon;
using toric::Polygon;
using toric::Rat;

struct GlobalOptions {
  std::string svg;
  std::uint64_t seed = 0;
  std::size_t samples = 1000000;
  std::string epsilon;
  double tolerance = 1e-9;
  std::string output;
};

std::string decimal(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string point_text(const toric::Point& p) {
  return "(" + toric::to_string(p.x) + ", " + toric::to_string(p.y) + ")";
}

Rat option_rat(const std::string& name, const std::string& text) {
  try {
    return toric::parse_rational(text);
  } catch (const toric::Error&) {
    throw CLI::ValidationError(name, "expected a rational such as 1/3 or 0.25, got '" +
                                         text + "'");
  }
}

double option_double(const std::string& name, const std::string& text) {
  return toric::to_double(option_rat(name, text));
}

PolygonDocument load_polygon(const std::string& path) {
  return parse_polygon(read_file(path));
}

Polygon load_rational(const std::string& path) {
  PolygonDocument doc = load_polygon(path);
  if (!doc.is_rational()) {
    throw toric::Error(toric::ErrorCode::IrrationalEdge,
                       path + " is a float document; this command needs exact input");
  }
  return std::get<Polygon>(std::move(doc.polygon));
}

DelzantPolygon load_delzant(const std::string& path) {
  return DelzantPolygon::certify(load_rational(path));
}

FloatPolygon as_float(const PolygonDocument& doc) {
  return doc.is_rational() ? toric::to_float(std::get<Polygon>(doc.polygon))
                           : std::get<FloatPolygon>(doc.polygon);
}

toric::Indicator as_indicator(const PolygonDocument& doc) {
  return doc.is_rational() ? toric::indicator(std::get<Polygon>(doc.polygon))
                           : toric::indicator(std::get<FloatPolygon>(doc.polygon));
}

class Session {
 public:
  Session(const GlobalOptions& opts, std::ostream& out) : opts_(opts), out_(out) {}

  std::ostream& out() { return out_; }
  const GlobalOptions& opts() const { return opts_; }

  Rat epsilon(const char* command) const {
    if (opts_.epsilon.empty()) {
      throw CLI::RequiredError(std::string(command) + " requires --epsilon");
    }
    return option_rat("--epsilon", opts_.epsilon);
  }

  /// Writes a document to --output if given, else to stdout. Returns true
  /// when stdout is still free for a summary.
  bool emit(const json& doc) {
    const std::string text = doc.dump(2) + "\n";
    if (opts_.output.empty()) {
      out_ << text;
      return false;
    }
    write_file(opts_.output, text);
    return true;
  }

  void svg(const std::vector<SvgLayer>& layers) const {
    if (!opts_.svg.empty()) write_file(opts_.svg, render_svg(layers));
  }

  std::string tolerance_note() const {
    return " (tolerance " + decimal(opts_.tolerance) + ")";
  }

  void estimate(const toric::Indicator& a, const toric::Indicator& b,
                const toric::FloatBox& box) {
    if (opts_.samples == 0) return;
    const toric::AreaEstimate e =
        toric::estimate_sym_diff(a, b, box, opts_.seed, opts_.samples);
    out_ << "estimate: " << decimal(e.value) << "\n";
    out_ << "sigma: " << decimal(e.sigma) << "\n";
    out_ << "samples: " << opts_.samples << "\n";
    out_ << "seed: " << opts_.seed << "\n";
  }

 private:
  const GlobalOptions& opts_;
  std::ostream& out_;
};

SvgLayer layer(const FloatPolygon& p, const char* fill, double opacity = 0.35) {
  return SvgLayer{p, fill, opacity, true};
}

SvgLayer layer(const Polygon& p, const char* fill, double opacity = 0.35) {
  return layer(toric::to_float(p), fill, opacity);
}

void print_report(std::ostream& out, const Polygon& p) {
  const toric::DelzantReport r = toric::validate(p);
  out << "delzant: " << (r.is_delzant ? "true" : "false") << "\n";
  out << "rational: true\n";
  out << "simple: true\n";
  out << "vertices: " << p.size() << "\n";
  out << "determinants:";
  for (const toric::Int& d : r.determinants) out << ' ' << d.str();
  out << "\n";
  for (const toric::NonSmoothVertex& ns : r.non_smooth_vertices) {
    out << "non-smooth vertex " << ns.index << ' ' << point_text(p.vertices()[ns.index])
        << ": defect " << ns.defect.str() << "\n";
  }
}

void print_float_report(std::ostream& out, const FloatPolygon& p, double tolerance) {
  const auto hs = toric::h_rep(p);
  std::size_t rational = 0;
  for (const auto& h : hs) rational += h.rational_slope ? 1 : 0;
  bool smooth = rational == hs.size();
  for (std::size_t i = 0; smooth && i < hs.size(); ++i) {
    const auto& n1 = hs[i].lattice_normal;
    const auto& n2 = hs[(i + 1) % hs.size()].lattice_normal;
    smooth = abs(toric::cross(n1, n2)) == 1;
  }
  out << "delzant: " << (smooth ? "true" : "false") << " (float input, tolerance "
      << decimal(tolerance) << ")\n";
  out << "rational: " << (rational == hs.size() ? "true" : "false") << "\n";
  out << "simple: true\n";
  out << "vertices: " << p.size() << "\n";
  out << "rational slopes: " << rational << " of " << hs.size() << "\n";
}

void print_map(std::ostream& out, const char* label, const toric::LatticeAffineMap& m) {
  out << label << ": " << to_json(m).dump() << "\n";
}

std::vector<SvgLayer> path_layers(const toric::Path& path, int frames) {
  std::vector<SvgLayer> layers;
  for (int i = 0; i <= frames; ++i) {
    const Polygon p = toric::sample(path, Rat(i, frames));
    layers.push_back(layer(p, i == 0 ? "#4c78a8" : (i == frames ? "#e45756" : "#999999"),
                           i == 0 || i == frames ? 0.35 : 0.08));
  }
  return layers;
}

toric::Path load_path(const std::string& file) { return parse_path(read_file(file)); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on Delzant polygons", "delzant"};
  app.fallthrough();
  app.require_subcommand(1);

  GlobalOptions opts;
  app.add_option("--svg", opts.svg, "Write an SVG rendering to this file");
  app.add_option("--seed", opts.seed, "Monte-Carlo seed")->capture_default_str();
  app.add_option("--samples", opts.samples, "Monte-Carlo sample count (0 disables)")
      ->capture_default_str();
  app.add_option("--epsilon", opts.epsilon, "Size parameter, rational or decimal");
  app.add_option("--tolerance", opts.tolerance, "Reported tolerance of float results")
      ->capture_default_str();
  app.add_option("-o,--output", opts.output, "Write the resulting document here");

  std::string file_a, file_b;
  std::size_t index = 0;
  std::string offset_text, t_text = "1/2";
  std::vector<std::string> rect, files;
  bool interval_only = false, monte_carlo = false;
  std::size_t steps = 100;

  auto* validate = app.add_subcommand("validate", "Check the Delzant conditions");
  validate->add_option("file", file_a)->required();

  auto* distance = app.add_subcommand("distance", "Symmetric difference area d(A, B)");
  distance->add_option("a", file_a)->required();
  distance->add_option("b", file_b)->required();
  distance->add_flag("--monte-carlo", monte_carlo, "Also print a seeded estimate");

  auto* hausdorff = app.add_subcommand("hausdorff", "Hausdorff distance d_H(A, B)");
  hausdorff->add_option("a", file_a)->required();
  hausdorff->add_option("b", file_b)->required();

  auto* dh = app.add_subcommand("dh", "Duistermaat-Heckman measure of a rectangle");
  dh->add_option("file", file_a)->required();
  dh->add_option("--rect", rect, "x_min x_max y_min y_max")->expected(4)->required();

  auto* chop = app.add_subcommand("chop", "Corner chop of size --epsilon");
  chop->add_option("file", file_a)->required();
  chop->add_option("--vertex", index, "Vertex index")->required();

  auto* slide = app.add_subcommand("slide", "Move an edge parallel to itself");
  slide->add_option("file", file_a)->required();
  slide->add_option("--edge", index, "Edge index")->required();
  slide->add_option("--offset", offset_text, "Offset, positive moves inward");
  slide->add_flag("--interval", interval_only, "Only print the admissible interval");

  auto* resolve = app.add_subcommand("resolve", "Resolve one non-smooth vertex");
  resolve->add_option("file", file_a)->required();
  resolve->add_option("--vertex", index, "Vertex index")->required();

  auto* smooth = app.add_subcommand("smooth", "Resolve every non-smooth vertex");
  smooth->add_option("file", file_a)->required();

  auto* congruent = app.add_subcommand("congruent", "Find an AGL(2, Z) congruence");
  congruent->add_option("a", file_a)->required();
  congruent->add_option("b", file_b)->required();

  auto* fingerprint = app.add_subcommand("fingerprint", "Congruence invariants");
  fingerprint->add_option("file", file_a)->required();

  auto* canonicalize = app.add_subcommand("canonicalize", "Base plus chop decomposition");
  canonicalize->add_option("file", file_a)->required();

  auto* connect = app.add_subcommand("connect", "Path between canonical representatives");
  connect->add_option("a", file_a)->required();
  connect->add_option("b", file_b)->required();

  auto* sample = app.add_subcommand("sample", "Evaluate a path document");
  sample->add_option("path", file_a)->required();
  sample->add_option("--t", t_text, "Parameter in [0, 1]")->capture_default_str();

  auto* modulus = app.add_subcommand("modulus", "Largest step distance of a path");
  modulus->add_option("path", file_a)->required();
  modulus->add_option("--n", steps, "Number of steps")->capture_default_str();

  auto* approx = app.add_subcommand("approx", "Delzant polygon within --epsilon");
  approx->require_subcommand(1);
  std::vector<std::string> centre{"0", "0"};
  std::string radius = "1";
  auto* approx_disc = approx->add_subcommand("disc", "Approximate a disc");
  approx_disc->add_option("--center", centre, "x y")->expected(2)->capture_default_str();
  approx_disc->add_option("--radius", radius)->capture_default_str();
  auto* approx_hull = approx->add_subcommand("hull", "Approximate the hull of points");
  approx_hull->add_option("file", file_a)->required();
  auto* approx_file = approx->add_subcommand("file", "Approximate a polygon document");
  approx_file->add_option("file", file_a)->required();

  auto* demo = app.add_subcommand("demo", "Worked examples and counterexamples");
  demo->require_subcommand(1);
  std::string c_text = "1", b_text = "1", a_text = "2", lambda_text = "1";
  std::int64_t k = 2, n = 1, m = 2;
  auto* cauchy = demo->add_subcommand("cauchy", "Cauchy sequence without Delzant limit");
  cauchy->add_option("--c", c_text)->capture_default_str();
  cauchy->add_option("--b", b_text)->capture_default_str();
  cauchy->add_option("--k", k)->capture_default_str();
  cauchy->add_option("--n", n)->capture_default_str();
  cauchy->add_option("--m", m)->capture_default_str();
  auto* qdelta = demo->add_subcommand("qdelta", "Square with an irrational corner cut");
  auto* step = demo->add_subcommand("hirzebruch-step", "H(a,b,k) to H(a,b,k+1)");
  step->add_option("--a", a_text)->capture_default_str();
  step->add_option("--b", b_text)->capture_default_str();
  step->add_option("--k", k)->capture_default_str();
  step->add_option("--t", t_text)->capture_default_str();
  auto* square = demo->add_subcommand("square-to-triangle", "Square to Delzant triangle");
  square->add_option("--lambda", lambda_text)->capture_default_str();
  square->add_option("--t", t_text)->capture_default_str();

  auto* render = app.add_subcommand("render", "Render polygon or path documents to --svg");
  render->add_option("files", files)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    Session s(opts, out);

    if (*validate) {
      const PolygonDocument doc = load_polygon(file_a);
      if (doc.is_rational()) {
        print_report(out, std::get<Polygon>(doc.polygon));
      } else {
        print_float_report(out, std::get<FloatPolygon>(doc.polygon), opts.tolerance);
      }
      s.svg({layer(as_float(doc), "#4c78a8")});
    } else if (*distance) {
      const PolygonDocument a = load_polygon(file_a), b = load_polygon(file_b);
      if (a.is_rational() && b.is_rational()) {
        out << toric::to_string(toric::sym_diff_distance(std::get<Polygon>(a.polygon),
                                                         std::get<Polygon>(b.polygon)))
            << "\n";
      } else {
        out << decimal(toric::sym_diff_area(as_float(a), as_float(b)))
            << s.tolerance_note() << "\n";
      }
      if (monte_carlo) {
        s.estimate(as_indicator(a), as_indicator(b),
                   toric::union_box(as_float(a).bounding_box(), as_float(b).bounding_box()));
      }
      s.svg({layer(as_float(a), "#4c78a8"), layer(as_float(b), "#e45756")});
    } else if (*hausdorff) {
      const PolygonDocument a = load_polygon(file_a), b = load_polygon(file_b);
      out << decimal(toric::hausdorff(as_float(a), as_float(b))) << s.tolerance_note()
          << "\n";
      s.svg({layer(as_float(a), "#4c78a8"), layer(as_float(b), "#e45756")});
    } else if (*dh) {
      const Polygon p = load_rational(file_a);
      const toric::Rect r{option_rat("--rect", rect[0]), option_rat("--rect", rect[1]),
                          option_rat("--rect", rect[2]), option_rat("--rect", rect[3])};
      if (r.x_min > r.x_max || r.y_min > r.y_max) {
        throw CLI::ValidationError("--rect", "expected x_min <= x_max and y_min <= y_max");
      }
      out << toric::to_string(toric::dh_measure(p, r)) << "\n";
    } else if (*chop) {
      const DelzantPolygon p = load_delzant(file_a);
      const Rat eps = s.epsilon("chop");
      const DelzantPolygon c = toric::corner_chop(p, index, eps);
      if (s.emit(to_json(c.polygon()))) {
        out << "area removed: " << toric::to_string(eps * eps / 2) << "\n";
      }
      s.svg({layer(p.polygon(), "#4c78a8"), layer(c.polygon(), "#e45756")});
    } else if (*slide) {
      const DelzantPolygon p = load_delzant(file_a);
      const toric::SlideInterval iv = toric::slide_interval(p, index);
      if (interval_only) {
        out << "interval: (" << (iv.lower ? toric::to_string(*iv.lower) : "-inf") << ", "
            << (iv.upper ? toric::to_string(*iv.upper) : "+inf") << ")\n";
      } else {
        if (offset_text.empty()) throw CLI::RequiredError("slide requires --offset");
        const DelzantPolygon q =
            toric::edge_slide(p, index, option_rat("--offset", offset_text));
        if (s.emit(to_json(q.polygon()))) {
          out << "area change: "
              << toric::to_string(toric::area(q.polygon()) - toric::area(p.polygon()))
              << "\n";
        }
        s.svg({layer(p.polygon(), "#4c78a8"), layer(q.polygon(), "#e45756")});
      }
    } else if (*resolve) {
      const Polygon p = load_rational(file_a);
      const toric::Resolution r = toric::resolve_vertex(p, index, s.epsilon("resolve"));
      if (s.emit(to_json(r.polygon))) {
        out << "alpha sequence:";
        for (const toric::Int& a : r.trace.alpha_sequence) out << ' ' << a.str();
        out << "\nnew edges: " << r.trace.new_edges << "\n";
        out << "loss: " << toric::to_string(toric::area(p) - toric::area(r.polygon))
            << "\n";
      }
      s.svg({layer(p, "#4c78a8"), layer(r.polygon, "#e45756")});
    } else if (*smooth) {
      const Polygon p = load_rational(file_a);
      const toric::Smoothing r = toric::smooth(p, s.epsilon("smooth"));
      if (s.emit(to_json(r.polygon.polygon()))) {
        out << "added edges: " << r.added_edges << "\n";
        out << "edge bound: " << r.edge_bound.str() << "\n";
        out << "loss: " << toric::to_string(r.loss) << "\n";
      }
      s.svg({layer(p, "#4c78a8"), layer(r.polygon.polygon(), "#e45756")});
    } else if (*congruent) {
      const DelzantPolygon a = load_delzant(file_a), b = load_delzant(file_b);
      const auto w = toric::congruent(a, b);
      out << "congruent: " << (w ? "true" : "false") << "\n";
      if (w) print_map(out, "witness", *w);
    } else if (*fingerprint) {
      const toric::CongruenceFingerprint f =
          toric::congruence_fingerprint(load_delzant(file_a));
      out << "edges: " << f.edges << "\n";
      out << "area: " << toric::to_string(f.area) << "\n";
      out << "lengths:";
      for (const Rat& l : f.lengths) out << ' ' << toric::to_string(l);
      out << "\n";
    } else if (*canonicalize) {
      const DelzantPolygon p = load_delzant(file_a);
      const toric::Decomposition d = toric::canonicalize(p);
      const bool summary = s.emit(to_json(d.representative.polygon(), "representative"));
      if (summary) {
        out << "base: " << toric::to_string(d.base) << "\n";
        out << "chops: " << d.chops.size() << "\n";
        for (const toric::ChopStep& c : d.chops) {
          out << "chop " << point_text(c.vertex) << " size "
              << toric::to_string(c.epsilon) << "\n";
        }
        print_map(out, "witness", d.witness);
      }
      s.svg({layer(toric::base_polygon(d.base).polygon(), "#999999", 0.15),
             layer(d.representative.polygon(), "#4c78a8")});
    } else if (*connect) {
      const toric::Path path =
          toric::connect(load_delzant(file_a), load_delzant(file_b));
      if (s.emit(to_json(path))) {
        out << "moves: " << path.moves.size() << "\n";
        for (const toric::Move& mv : path.moves) {
          out << toric::move_name(mv) << (mv.reversed ? " (reversed)" : "") << "\n";
        }
      }
      s.svg(path_layers(path, 8));
    } else if (*sample) {
      const toric::Path path = load_path(file_a);
      const Polygon p = toric::sample(path, option_rat("--t", t_text));
      s.emit(to_json(p));
      s.svg({layer(p, "#4c78a8")});
    } else if (*modulus) {
      out << toric::to_string(toric::continuity_modulus(load_path(file_a), steps)) << "\n";
    } else if (*approx) {
      const double eps = toric::to_double(s.epsilon("approx"));
      // The body as an oracle plus an outline for rendering and sampling.
      std::optional<toric::SupportOracle> disc;
      std::optional<FloatPolygon> body;
      if (*approx_disc) {
        disc = toric::SupportOracle::disc(option_double("--center", centre[0]),
                                          option_double("--center", centre[1]),
                                          option_double("--radius", radius));
      } else {
        body = as_float(load_polygon(file_a));
        if (*approx_hull) body = toric::convex_hull(body->vertices());
      }
      const toric::DelzantApproximation a = disc
                                                ? toric::delzant_approximate(*disc, eps)
                                                : toric::delzant_approximate(*body, eps);
      const FloatPolygon result = toric::to_float(a.polygon.polygon());
      const FloatPolygon outline = disc ? toric::outer_polygon(*disc, 256) : *body;
      if (s.emit(to_json(a.polygon.polygon()))) {
        out << "vertices: " << a.polygon.size() << "\n";
        out << "inner gap: " << decimal(a.inner_gap) << "\n";
        out << "rational distance: " << decimal(a.rational_distance) << "\n";
        out << "smoothing loss: " << toric::to_string(a.smoothing_loss) << "\n";
        out << "total bound: " << decimal(a.total_bound) << "\n";
        s.estimate(disc ? disc->contains : toric::indicator(*body), toric::indicator(result),
                   toric::union_box(result.bounding_box(), outline.bounding_box()));
      }
      s.svg({layer(outline, "#999999", 0.15), layer(result, "#4c78a8")});
    } else if (*demo) {
      if (*cauchy) {
        const Rat c = option_rat("--c", c_text), b = option_rat("--b", b_text);
        const DelzantPolygon an = toric::cauchy_sequence(c, b, k, n);
        const DelzantPolygon am = toric::cauchy_sequence(c, b, k, m);
        const Rat d = toric::sym_diff_distance(an.polygon(), am.polygon());
        const Polygon limit = toric::cauchy_limit(b, k);
        const toric::DelzantReport report = toric::validate(limit);
        out << "A_" << n << ": "
            << toric::to_string(toric::Base(toric::HirzebruchBase{c / Rat(n) + b * Rat(k) / 2, b, k}))
            << "\n";
        out << "A_" << m << ": "
            << toric::to_string(toric::Base(toric::HirzebruchBase{c / Rat(m) + b * Rat(k) / 2, b, k}))
            << "\n";
        out << "d: " << toric::to_string(d) << "\n";
        out << "limit delzant: " << (report.is_delzant ? "true" : "false") << "\n";
        for (const toric::NonSmoothVertex& ns : report.non_smooth_vertices) {
          out << "limit non-smooth vertex " << point_text(limit.vertices()[ns.index])
              << ": defect " << ns.defect.str() << "\n";
        }
        s.svg({layer(limit, "#999999", 0.15), layer(an.polygon(), "#4c78a8"),
               layer(am.polygon(), "#e45756")});
      } else if (*qdelta) {
        const double eps = toric::to_double(s.epsilon("qdelta"));
        const FloatPolygon q = toric::q_delta(eps);
        if (s.emit(to_json(q, std::string("Q_delta")))) {
          const FloatPolygon sq = toric::to_float(toric::hirzebruch(Rat(1), Rat(1), 0).polygon());
          out << "delta: " << decimal(eps * (2 + std::sqrt(2.0)) / 4) << "\n";
          out << "d to H(1,1,0): " << decimal(toric::sym_diff_area(sq, q))
              << s.tolerance_note() << "\n";
          s.estimate(toric::indicator(sq), toric::indicator(q), sq.bounding_box());
        }
        s.svg({layer(q, "#4c78a8")});
      } else if (*step) {
        const toric::Move mv{toric::HirzebruchStep{option_rat("--a", a_text),
                                                   option_rat("--b", b_text), k}};
        const Polygon p = toric::sample(mv, option_rat("--t", t_text));
        s.emit(to_json(p));
        s.svg({layer(p, "#4c78a8")});
      } else if (*square) {
        const toric::Move mv{toric::SquareToTriangle{option_rat("--lambda", lambda_text)}};
        const Polygon p = toric::sample(mv, option_rat("--t", t_text));
        s.emit(to_json(p));
        s.svg({layer(p, "#4c78a8")});
      }
    } else if (*render) {
      if (opts.svg.empty()) throw CLI::RequiredError("render requires --svg");
      std::vector<SvgLayer> layers;
      static constexpr const char* kFills[] = {"#4c78a8", "#e45756", "#54a24b",
                                               "#f58518", "#b279a2"};
      for (std::size_t i = 0; i < files.size(); ++i) {
        const json j = json::parse(read_file(files[i]), nullptr, false);
        if (j.is_object() && j.contains("moves")) {
          for (SvgLayer& l : path_layers(path_from_json(j), 8)) layers.push_back(std::move(l));
        } else {
          layers.push_back(layer(as_float(parse_polygon(read_file(files[i]))),
                                 kFills[i % 5]));
        }
      }
      s.svg(layers);
      out << "wrote " << opts.svg << "\n";
    }
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitUsageError;
  } catch (const toric::Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
}

}  // namespace delzant_cli
