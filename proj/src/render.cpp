#include "khayyam/render.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "khayyam/conics.hpp"
#include "khayyam/error.hpp"

namespace khayyam {

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

double distance(Point2 p, Point2 q) { return std::hypot(p.x - q.x, p.y - q.y); }

std::vector<std::vector<Point2>> clip_runs(const std::vector<Point2>& pts, const Viewport& view) {
  const double slack = 1e-9 * std::max(view.xmax - view.xmin, view.ymax - view.ymin);
  std::vector<std::vector<Point2>> runs;
  std::vector<Point2> current;
  for (const Point2& p : pts) {
    if (std::isfinite(p.x) && std::isfinite(p.y) && view.contains(p, slack)) {
      current.push_back(p);
    } else if (!current.empty()) {
      if (current.size() >= 2) runs.push_back(std::move(current));
      current.clear();
    }
  }
  if (current.size() >= 2) runs.push_back(std::move(current));
  return runs;
}

double farthest_corner(const Viewport& view, Point2 from) {
  double r = 0.0;
  for (double x : {view.xmin, view.xmax}) {
    for (double y : {view.ymin, view.ymax}) r = std::max(r, distance({x, y}, from));
  }
  return r;
}

void append_runs(std::vector<std::vector<Point2>>& out, std::vector<std::vector<Point2>> runs) {
  for (auto& r : runs) out.push_back(std::move(r));
}

std::string path_data(const std::vector<Point2>& run, const ViewTransform& t) {
  std::string d;
  for (std::size_t i = 0; i < run.size(); ++i) {
    const Point2 s = t.to_screen(run[i]);
    d += (i == 0 ? "M " : " L ") + fixed6(s.x) + " " + fixed6(s.y);
  }
  return d;
}

std::string line_element(Point2 a, Point2 b) {
  return "x1=\"" + fixed6(a.x) + "\" y1=\"" + fixed6(a.y) + "\" x2=\"" + fixed6(b.x) +
         "\" y2=\"" + fixed6(b.y) + "\"";
}

}  // namespace

std::vector<RoleSegment> role_segments(const SolveReport& report) {
  const SpeciesInstance& s = report.species;
  const SpeciesRow& row = species_row(s.id);
  std::vector<RoleSegment> out;
  const Point2 origin{0.0, 0.0};
  if (s.b) out.push_back({"b", kColorSegment, origin, {0.0, *s.b}, 0.0, false});
  if (s.c) out.push_back({"c", kColorSegment, origin, {0.0, *s.c}, 0.0, false});
  if (s.l) out.push_back({"l", kColorL, origin, {row.l_side * *s.l, 0.0}, 8.0, false});
  if (s.a) out.push_back({"a", kColorA, origin, {row.a_side * *s.a, 0.0}, 16.0, false});
  for (const ImplicitConic* c : {&report.triple.working_1, &report.triple.working_2}) {
    if (c->kind == ConicKind::DiameterHyperbola && c->frame.vertices.size() == 2) {
      out.push_back({"diameter", kColorDiameter, c->frame.vertices[0], c->frame.vertices[1], 24.0,
                     false});
    }
  }
  for (const AcceptedRoot& r : report.roots) {
    out.push_back({"solution", kColorSolution, origin, {r.x, 0.0}, 0.0, false});
    out.push_back({"companion", kColorInk, {r.x, 0.0}, {r.x, r.y}, 0.0, true});
  }
  return out;
}

Viewport compute_viewport(const SolveReport& report, const RenderOptions& opts) {
  std::vector<Point2> pts{{0.0, 0.0}};
  for (const RoleSegment& seg : role_segments(report)) {
    pts.push_back(seg.from);
    pts.push_back(seg.to);
  }
  for (ConicRole role : {ConicRole::Working1, ConicRole::Working2, ConicRole::Hidden}) {
    const ImplicitConic& c = report.triple[role];
    pts.push_back(c.frame.origin);
    for (const Point2& v : c.frame.vertices) pts.push_back(v);
  }
  for (const IntersectionPoint& p : report.intersections) pts.push_back({p.x, p.y});

  Viewport v{INFINITY, -INFINITY, INFINITY, -INFINITY};
  for (const Point2& p : pts) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) continue;
    v.xmin = std::min(v.xmin, p.x);
    v.xmax = std::max(v.xmax, p.x);
    v.ymin = std::min(v.ymin, p.y);
    v.ymax = std::max(v.ymax, p.y);
  }
  if (!(v.xmin <= v.xmax) || !(v.ymin <= v.ymax)) throw EmptyViewport("no finite features to frame");

  const double cx = 0.5 * (v.xmin + v.xmax);
  const double cy = 0.5 * (v.ymin + v.ymax);
  double hw = 0.5 * (v.xmax - v.xmin) * opts.margin_factor;
  double hh = 0.5 * (v.ymax - v.ymin) * opts.margin_factor;
  if (hw <= 0.0 && hh <= 0.0) hw = hh = 1.0;
  const double aspect = static_cast<double>(opts.width_px) / opts.height_px;
  if (hw < hh * aspect) {
    hw = hh * aspect;
  } else {
    hh = hw / aspect;
  }
  return {cx - hw, cx + hw, cy - hh, cy + hh};
}

ViewTransform make_transform(const Viewport& view, const RenderOptions& opts) {
  return {view, opts.width_px / (view.xmax - view.xmin)};
}

std::vector<std::vector<Point2>> sample_conic(const ImplicitConic& conic, const Viewport& view,
                                              int samples) {
  if (samples < 2) throw DomainError("need at least two samples per branch");
  const PrincipalForm pf = principal_form(conic.form);
  const CurveClass cls = conic_kind_of(conic.form);
  const double n = static_cast<double>(samples - 1);
  std::vector<std::vector<Point2>> out;

  if (cls == CurveClass::Parabola) {
    const double u0 = -pf.du / (2.0 * pf.l1);
    const double v0 = -(pf.c - pf.l1 * u0 * u0) / pf.dv;
    const double reach = farthest_corner(view, pf.to_world(u0, v0)) + 1.0;
    // Past this half-width the curve has climbed further than the viewport extends.
    const double half = std::min(reach, std::sqrt(reach * std::abs(pf.dv / pf.l1)));
    std::vector<Point2> pts;
    for (int i = 0; i < samples; ++i) {
      const double u = u0 - half + 2.0 * half * i / n;
      const double v = v0 - pf.l1 / pf.dv * (u - u0) * (u - u0);
      pts.push_back(pf.to_world(u, v));
    }
    append_runs(out, clip_runs(pts, view));
    return out;
  }

  const double u0 = -pf.du / (2.0 * pf.l1);
  const double v0 = -pf.dv / (2.0 * pf.l2);
  const double k = pf.l1 * u0 * u0 + pf.l2 * v0 * v0 - pf.c;

  if (cls == CurveClass::Circle) {
    if (!(k / pf.l1 > 0.0)) return out;
    const double ru = std::sqrt(k / pf.l1);
    const double rv = std::sqrt(k / pf.l2);
    std::vector<Point2> pts;
    for (int i = 0; i < samples; ++i) {
      const double theta = 2.0 * std::numbers::pi * i / n;
      pts.push_back(pf.to_world(u0 + ru * std::cos(theta), v0 + rv * std::sin(theta)));
    }
    append_runs(out, clip_runs(pts, view));
    return out;
  }

  // Hyperbola l1 (u-u0)^2 + l2 (v-v0)^2 = k, l1 and l2 of opposite signs.
  const double reach = farthest_corner(view, pf.to_world(u0, v0)) + 1.0;
  if (k == 0.0) {
    const double slope = std::sqrt(-pf.l1 / pf.l2);
    for (double s : {slope, -slope}) {
      std::vector<Point2> pts;
      for (int i = 0; i < samples; ++i) {
        const double du = -reach + 2.0 * reach * i / n;
        pts.push_back(pf.to_world(u0 + du, v0 + s * du));
      }
      append_runs(out, clip_runs(pts, view));
    }
    return out;
  }
  const bool along_u = k / pf.l1 > 0.0;
  const double transverse = along_u ? std::sqrt(k / pf.l1) : std::sqrt(k / pf.l2);
  const double conjugate = along_u ? std::sqrt(-k / pf.l2) : std::sqrt(-k / pf.l1);
  const double t_max = std::asinh(reach / std::min(transverse, conjugate)) + 0.1;
  for (double branch : {-1.0, 1.0}) {
    std::vector<Point2> pts;
    for (int i = 0; i < samples; ++i) {
      const double t = -t_max + 2.0 * t_max * i / n;
      const double along = branch * transverse * std::cosh(t);
      const double across = conjugate * std::sinh(t);
      pts.push_back(along_u ? pf.to_world(u0 + along, v0 + across)
                            : pf.to_world(u0 + across, v0 + along));
    }
    append_runs(out, clip_runs(pts, view));
  }
  return out;
}

std::string render_svg(const SolveReport& report, const RenderOptions& opts) {
  if (opts.samples_per_branch < 16) throw DomainError("samples_per_branch must be at least 16");
  if (opts.width_px <= 0 || opts.height_px <= 0) throw DomainError("canvas size must be positive");
  const Viewport view = compute_viewport(report, opts);
  const ViewTransform t = make_transform(view, opts);
  const SpeciesRow& row = species_row(report.species.id);

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(opts.width_px) + "\" height=\"" + std::to_string(opts.height_px) +
         "\" viewBox=\"0 0 " + std::to_string(opts.width_px) + " " +
         std::to_string(opts.height_px) + "\">\n";
  svg += "<!-- " + std::string(to_string(report.species.id)) + ": " + std::string(row.equation) +
         "; working " + std::string(row.working_1) + ", " + std::string(row.working_2) +
         "; hidden " + std::string(row.hidden) + " -->\n";
  svg += "<!-- legend: " + std::string(kColorSegment) + " b,c  " + std::string(kColorL) + " l  " +
         std::string(kColorA) + " a  " + std::string(kColorDiameter) + " diameter  " +
         std::string(kColorSolution) + " solution x  dashed: hidden conic, companion y -->\n";

  svg += "<g id=\"axes\" stroke=\"" + std::string(kColorInk) + "\" stroke-width=\"1\">\n";
  if (view.ymin <= 0.0 && 0.0 <= view.ymax) {
    svg += "<line " + line_element(t.to_screen({view.xmin, 0.0}), t.to_screen({view.xmax, 0.0})) + "/>\n";
  }
  if (view.xmin <= 0.0 && 0.0 <= view.xmax) {
    svg += "<line " + line_element(t.to_screen({0.0, view.ymin}), t.to_screen({0.0, view.ymax})) + "/>\n";
  }
  svg += "</g>\n";

  for (ConicRole role : {ConicRole::Working1, ConicRole::Working2, ConicRole::Hidden}) {
    const bool hidden = role == ConicRole::Hidden;
    if (hidden && !opts.show_hidden) continue;
    const ImplicitConic& conic = report.triple[role];
    svg += "<g id=\"" + std::string(to_string(role)) + "\" class=\"" +
           std::string(to_string(conic.kind)) + "\" fill=\"none\" stroke=\"" +
           std::string(kColorInk) + "\" stroke-width=\"" + (hidden ? "1" : "1.5") + "\"" +
           (hidden ? " stroke-dasharray=\"" + std::string(kDashPattern) + "\"" : "") + ">\n";
    for (const auto& run : sample_conic(conic, view, opts.samples_per_branch)) {
      svg += "<path d=\"" + path_data(run, t) + "\"/>\n";
    }
    svg += "</g>\n";
  }

  svg += "<g id=\"segments\" stroke-width=\"3\">\n";
  for (const RoleSegment& seg : role_segments(report)) {
    Point2 a = t.to_screen(seg.from);
    Point2 b = t.to_screen(seg.to);
    const bool vertical = seg.from.x == seg.to.x && seg.from.y != seg.to.y;
    if (vertical) {
      a.x -= seg.lane_px;
      b.x -= seg.lane_px;
    } else {
      a.y += seg.lane_px;
      b.y += seg.lane_px;
    }
    svg += "<line data-role=\"" + seg.role + "\" data-length=\"" + fixed6(distance(seg.from, seg.to)) +
           "\" stroke=\"" + std::string(seg.color) + "\"" +
           (seg.dashed ? " stroke-dasharray=\"" + std::string(kDashPattern) + "\"" : "") + " " +
           line_element(a, b) + "/>\n";
  }
  svg += "</g>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace khayyam
