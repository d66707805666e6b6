#include "khayyam/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "khayyam/classifier.hpp"
#include "khayyam/oracle.hpp"

namespace khayyam {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

/// The conic as a polynomial in y at fixed x: a2 y^2 + a1 y + a0.
struct YQuadratic {
  double a2;
  double a1;
  double a0;
};

YQuadratic at_abscissa(const QuadraticForm<double>& q, double x) {
  return {q.yy, q.xy * x + q.y, (q.xx * x + q.x) * x + q.c};
}

bool linear_in_y(const QuadraticForm<double>& q) { return q.yy == 0.0 && (q.xy != 0.0 || q.y != 0.0); }

/// Real y with a2 y^2 + a1 y + a0 = 0; a slightly negative discriminant is
/// read as a tangency.
std::vector<double> solve_for_y(const YQuadratic& e) {
  if (e.a2 == 0.0) {
    if (e.a1 == 0.0) return {};
    return {-e.a0 / e.a1};
  }
  double disc = e.a1 * e.a1 - 4.0 * e.a2 * e.a0;
  const double slack = 64.0 * kEps * (e.a1 * e.a1 + 4.0 * std::abs(e.a2 * e.a0));
  if (disc < 0.0) {
    if (disc < -slack) return {};
    disc = 0.0;
  }
  if (disc == 0.0) return {-e.a1 / (2.0 * e.a2)};
  const double root = std::sqrt(disc);
  const double big = -0.5 * (e.a1 + std::copysign(root, e.a1));
  const double y1 = big / e.a2;
  const double y2 = big != 0.0 ? e.a0 / big : -y1;
  return {std::min(y1, y2), std::max(y1, y2)};
}

/// Rounding level of a normalized residual at (x, y).
double residual_floor(const ImplicitConic& c, double x, double y) {
  const QuadraticForm<double>& q = c.form;
  const double ax = std::abs(x), ay = std::abs(y);
  const double terms = std::abs(q.xx) * ax * ax + std::abs(q.xy) * ax * ay +
                       std::abs(q.yy) * ay * ay + std::abs(q.x) * ax + std::abs(q.y) * ay +
                       std::abs(q.c);
  const double scale = max_abs_coefficient(q);
  return 64.0 * kEps * terms / (scale > 0.0 ? scale : 1.0);
}

struct Gradient {
  double dx;
  double dy;
};

Gradient gradient(const QuadraticForm<double>& q, double x, double y) {
  return {2.0 * q.xx * x + q.xy * y + q.x, q.xy * x + 2.0 * q.yy * y + q.y};
}

/// Newton on the pair (p, q) = (0, 0), accepting a step only if the larger
/// normalized residual shrinks.
Point2 refine(const ImplicitConic& p, const ImplicitConic& q, Point2 pt) {
  auto worst = [&](Point2 z) {
    return std::max(normalized_residual(p, z.x, z.y), normalized_residual(q, z.x, z.y));
  };
  double best = worst(pt);
  for (int it = 0; it < 8 && best > 0.0; ++it) {
    const Gradient gp = gradient(p.form, pt.x, pt.y);
    const Gradient gq = gradient(q.form, pt.x, pt.y);
    const double det = gp.dx * gq.dy - gp.dy * gq.dx;
    if (det == 0.0 || !std::isfinite(det)) break;
    const double fp = evaluate_conic(p, pt.x, pt.y);
    const double fq = evaluate_conic(q, pt.x, pt.y);
    const Point2 next{pt.x - (fp * gq.dy - fq * gp.dy) / det,
                      pt.y - (gp.dx * fq - gq.dx * fp) / det};
    const double r = worst(next);
    if (!(r < best)) break;
    best = r;
    pt = next;
  }
  return pt;
}

std::vector<double> candidate_ordinates(const ImplicitConic& p, const ImplicitConic& q, double x) {
  const YQuadratic ep = at_abscissa(p.form, x);
  const YQuadratic eq = at_abscissa(q.form, x);
  // Prefer a conic that is linear in y and does not degenerate at this x.
  if (linear_in_y(p.form) && ep.a1 != 0.0) return solve_for_y(ep);
  if (linear_in_y(q.form) && eq.a1 != 0.0) return solve_for_y(eq);
  std::vector<double> ys = solve_for_y(ep);
  if (ys.empty()) ys = solve_for_y(eq);
  return ys;
}

SolveReport solve_with(const CubicEquation& eq, const SpeciesInstance& species, double tol) {
  SolveReport report;
  report.cubic = eq;
  report.species = species;
  report.triple = build_triple(species);
  report.intersections = intersect(report.triple.working_1, report.triple.working_2, tol);

  const double scale = coefficient_scale(eq);
  for (const IntersectionPoint& pt : report.intersections) {
    if (!(pt.x > 0.0)) continue;
    const double value = std::abs(evaluate_cubic(eq, pt.x));
    const double ax = std::abs(pt.x);
    const double rounding =
        64.0 * kEps * (((ax + std::abs(eq.A)) * ax + std::abs(eq.B)) * ax + std::abs(eq.C));
    if (!(value < std::max(tol * scale, rounding))) continue;  // extraneous eliminant root

    AcceptedRoot root;
    root.x = pt.x;
    root.y = companion_ordinate(report.triple, pt.x);
    root.cubic_residual = value;
    root.hidden_residual = normalized_residual(report.triple.hidden, pt.x, pt.y);
    root.multiplicity = 1;
    if (pt.multiplicity >= 2) {
      // Keep the tangency only if the cubic itself has a double root here; a
      // cofactor root landing on a cubic root would otherwise inflate the count.
      const double slope = std::abs((3.0 * pt.x + 2.0 * eq.A) * pt.x + eq.B);
      const double slope_scale = 3.0 * ax * ax + 2.0 * std::abs(eq.A) * ax + std::abs(eq.B);
      if (slope <= std::sqrt(tol) * slope_scale) root.multiplicity = 2;
    }
    const bool duplicate = !report.roots.empty() &&
                           std::abs(report.roots.back().x - root.x) <= 1e-8 * std::max(1.0, ax);
    if (duplicate) {
      report.roots.back().multiplicity = std::max(report.roots.back().multiplicity, root.multiplicity);
    } else {
      report.roots.push_back(root);
    }
  }

  report.oracle_roots = oracle_positive_roots(eq);
  report.agreement = roots_agree(report.roots, report.oracle_roots);
  return report;
}

}  // namespace

std::vector<IntersectionPoint> intersect(const ImplicitConic& p, const ImplicitConic& q, double tol) {
  const UniPoly<double> eliminant = eliminate_y(p.form, q.form);
  if (eliminant.is_zero()) throw ProportionalConics("conics share a common component");
  if (eliminant.degree() == 0) return {};

  std::vector<IntersectionPoint> points;
  for (const RealRoot& r : real_roots(eliminant, tol)) {
    for (double y : candidate_ordinates(p, q, r.value)) {
      Point2 pt{r.value, y};
      if (r.multiplicity == 1) pt = refine(p, q, pt);
      const double r1 = normalized_residual(p, pt.x, pt.y);
      const double r2 = normalized_residual(q, pt.x, pt.y);
      if (!(r1 < std::max(tol, residual_floor(p, pt.x, pt.y)))) continue;
      if (!(r2 < std::max(tol, residual_floor(q, pt.x, pt.y)))) continue;

      const double radius = std::sqrt(tol);
      auto same = [&](const IntersectionPoint& o) {
        return std::abs(o.x - pt.x) <= radius * std::max(1.0, std::abs(pt.x)) &&
               std::abs(o.y - pt.y) <= radius * std::max(1.0, std::abs(pt.y));
      };
      const auto it = std::find_if(points.begin(), points.end(), same);
      if (it != points.end()) {
        it->multiplicity = std::max(it->multiplicity, r.multiplicity);
        continue;
      }
      points.push_back({pt.x, pt.y, r1, r2, r.multiplicity});
    }
  }
  std::sort(points.begin(), points.end(), [](const IntersectionPoint& u, const IntersectionPoint& v) {
    return u.x != v.x ? u.x < v.x : u.y < v.y;
  });
  return points;
}

double companion_ordinate(const ConicTriple& triple, double x) {
  const std::array<const ImplicitConic*, 3> order = {&triple.hidden, &triple.working_1,
                                                     &triple.working_2};
  for (const ImplicitConic* c : order) {
    const YQuadratic e = at_abscissa(c->form, x);
    if (linear_in_y(c->form) && e.a1 != 0.0) return -e.a0 / e.a1;
  }
  // No conic is linear in y here: take the root the other two conics agree with best.
  double best_y = std::numeric_limits<double>::quiet_NaN();
  double best_r = std::numeric_limits<double>::infinity();
  for (double y : solve_for_y(at_abscissa(triple.hidden.form, x))) {
    const double r = std::max(normalized_residual(triple.working_1, x, y),
                              normalized_residual(triple.working_2, x, y));
    if (r < best_r) {
      best_r = r;
      best_y = y;
    }
  }
  return best_y;
}

SolveReport solve_khayyam(const CubicEquation& eq, double tol) {
  return solve_with(eq, classify(eq), tol);
}

SolveReport solve_species(const SpeciesInstance& s, double tol) {
  return solve_with(signed_cubic(s), s, tol);
}

bool roots_agree(const std::vector<AcceptedRoot>& roots, const std::vector<RealRoot>& oracle) {
  std::vector<double> mine, theirs;
  for (const AcceptedRoot& r : roots) mine.insert(mine.end(), static_cast<std::size_t>(r.multiplicity), r.x);
  for (const RealRoot& r : oracle) theirs.insert(theirs.end(), static_cast<std::size_t>(r.multiplicity), r.value);
  if (mine.size() != theirs.size()) return false;
  for (std::size_t i = 0; i < mine.size(); ++i) {
    const double diff = std::abs(mine[i] - theirs[i]);
    if (!(diff <= kAgreementTolerance * std::max(std::abs(theirs[i]), kEps))) return false;
  }
  return true;
}

}  // namespace khayyam
