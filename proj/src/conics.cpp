#include "khayyam/conics.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace khayyam {

namespace {

using K = ConicKind;

// clang-format off
constexpr std::array<SpeciesRow, 13> kSpeciesTable = {{
  {SpeciesId::S1,  "x³+b²x=b²l",     "x²=by",          "y²=x(l-x)",   "x(y+b)=bl", {K::Parabola, K::Circle, K::AsymptoticHyperbola}, 0, +1},
  {SpeciesId::S2,  "x³+b²l=b²x",     "x²=by",          "y²=x(x-l)",   "x(b-y)=bl", {K::Parabola, K::DiameterHyperbola, K::AsymptoticHyperbola}, 0, +1},
  {SpeciesId::S3,  "x³=b²x+b²l",     "x²=by",          "y²=x(l+x)",   "x(y-b)=bl", {K::Parabola, K::DiameterHyperbola, K::AsymptoticHyperbola}, 0, -1},
  {SpeciesId::S4,  "x³+ax²=c³",      "xy=c²",          "y²=c(x+a)",   "x(x+a)=cy", {K::AsymptoticHyperbola, K::Parabola, K::Parabola}, -1, 0},
  {SpeciesId::S5,  "x³+c³=ax²",      "xy=c²",          "y²=c(a-x)",   "cy=x(a-x)", {K::AsymptoticHyperbola, K::Parabola, K::Parabola}, +1, 0},
  {SpeciesId::S6,  "x³=ax²+c³",      "xy=c²",          "y²=c(x-a)",   "cy=x(x-a)", {K::AsymptoticHyperbola, K::Parabola, K::Parabola}, +1, 0},
  {SpeciesId::S7,  "x³+ax²+b²x=b²l", "y²=(l-x)(x+a)",  "x(y+b)=bl",   "by=x(x+a)", {K::Circle, K::AsymptoticHyperbola, K::Parabola}, -1, +1},
  {SpeciesId::S8,  "x³+ax²+b²l=b²x", "y²=(x-l)(x+a)",  "x(b-y)=bl",   "by=x(x+a)", {K::DiameterHyperbola, K::AsymptoticHyperbola, K::Parabola}, -1, +1},
  {SpeciesId::S9,  "x³+b²x+b²l=ax²", "y²=(x+l)(a-x)",  "x(y-b)=bl",   "by=x(a-x)", {K::Circle, K::AsymptoticHyperbola, K::Parabola}, +1, -1},
  {SpeciesId::S10, "x³=ax²+b²x+b²l", "y²=(x+l)(x-a)",  "x(y-b)=bl",   "by=x(x-a)", {K::DiameterHyperbola, K::AsymptoticHyperbola, K::Parabola}, +1, -1},
  {SpeciesId::S11, "x³+ax²=b²x+b²l", "y²=(x+l)(x+a)",  "x(y-b)=bl",   "by=x(x+a)", {K::DiameterHyperbola, K::AsymptoticHyperbola, K::Parabola}, -1, -1},
  {SpeciesId::S12, "x³+b²x=ax²+b²l", "y²=(l-x)(x-a)",  "x(y+b)=bl",   "by=x(x-a)", {K::Circle, K::AsymptoticHyperbola, K::Parabola}, +1, +1},
  {SpeciesId::S13, "x³+b²l=ax²+b²x", "y²=(x-l)(x-a)",  "x(b-y)=bl",   "by=x(x-a)", {K::DiameterHyperbola, K::AsymptoticHyperbola, K::Parabola}, +1, +1},
}};
// clang-format on

Point2 unit(Point2 v) {
  const double n = std::hypot(v.x, v.y);
  return {v.x / n, v.y / n};
}

Point2 rotate(const PrincipalForm& pf, Point2 v) { return pf.to_world(v.x, v.y); }

bool is_negligible(double value, double scale) {
  return std::abs(value) <= 64.0 * std::numeric_limits<double>::epsilon() * scale;
}

void fill_circle(ImplicitConic& conic, const PrincipalForm& pf) {
  const double u0 = -pf.du / (2.0 * pf.l1);
  const double v0 = -pf.dv / (2.0 * pf.l2);
  const double rhs = pf.l1 * u0 * u0 + pf.l2 * v0 * v0 - pf.c;
  const double r2 = rhs / pf.l1;
  if (!(r2 > 0.0)) throw DegenerateConic("circle has no real points");
  const double r = std::sqrt(r2);
  conic.frame.origin = pf.to_world(u0, v0);
  conic.frame.axis = rotate(pf, {1.0, 0.0});
  conic.frame.radius = r;
  conic.frame.vertices = {pf.to_world(u0 - r, v0), pf.to_world(u0 + r, v0)};
}

void fill_parabola(ImplicitConic& conic, const PrincipalForm& pf) {
  if (pf.dv == 0.0) throw DegenerateConic("parabola degenerates into parallel lines");
  const double u0 = -pf.du / (2.0 * pf.l1);
  const double v0 = -(pf.c - pf.l1 * u0 * u0) / pf.dv;
  const double opening = -pf.l1 / pf.dv;  // v - v0 = opening * (u - u0)^2
  conic.frame.origin = pf.to_world(u0, v0);
  conic.frame.axis = rotate(pf, {0.0, opening > 0 ? 1.0 : -1.0});
  conic.frame.vertices = {conic.frame.origin};
  conic.parameter_p = std::abs(pf.dv / pf.l1);
}

void fill_hyperbola(ImplicitConic& conic, const PrincipalForm& pf) {
  const QuadraticForm<double>& q = conic.form;
  if (q.xx == 0.0 && q.yy == 0.0) {
    // xy x y + x x + y y + c = 0  <=>  (x - x0)(y - y0) = const, asymptotes axis-parallel.
    const double x0 = -q.y / q.xy;
    const double y0 = -q.x / q.xy;
    conic.frame.origin = {x0, y0};
    conic.frame.axis = {1.0, 0.0};
    conic.frame.asymptotes = {Line{{x0, y0}, {0.0, 1.0}}, Line{{x0, y0}, {1.0, 0.0}}};
    return;
  }
  const double u0 = -pf.du / (2.0 * pf.l1);
  const double v0 = -pf.dv / (2.0 * pf.l2);
  const double rhs = pf.l1 * u0 * u0 + pf.l2 * v0 * v0 - pf.c;
  conic.frame.origin = pf.to_world(u0, v0);
  const double slope = std::sqrt(-pf.l1 / pf.l2);
  conic.frame.asymptotes = {Line{conic.frame.origin, unit(rotate(pf, {1.0, slope}))},
                            Line{conic.frame.origin, unit(rotate(pf, {1.0, -slope}))}};
  if (rhs / pf.l1 > 0.0) {
    const double s = std::sqrt(rhs / pf.l1);
    conic.frame.axis = rotate(pf, {1.0, 0.0});
    conic.frame.vertices = {pf.to_world(u0 - s, v0), pf.to_world(u0 + s, v0)};
  } else if (rhs / pf.l2 > 0.0) {
    const double s = std::sqrt(rhs / pf.l2);
    conic.frame.axis = rotate(pf, {0.0, 1.0});
    conic.frame.vertices = {pf.to_world(u0, v0 - s), pf.to_world(u0, v0 + s)};
  } else {
    // The hyperbola has collapsed onto its asymptotes.
    conic.frame.axis = rotate(pf, {1.0, 0.0});
    conic.frame.vertices = {conic.frame.origin, conic.frame.origin};
  }
}

}  // namespace

const SpeciesRow& species_row(SpeciesId id) {
  return kSpeciesTable.at(static_cast<std::size_t>(number_of(id) - 1));
}

std::array<QuadraticForm<Rational>, 3> exact_forms(const ExactSpecies& s) {
  validate(s);
  return species_forms(s.id, signed_params(s));
}

ConicTriple build_triple(const SpeciesInstance& s) {
  validate(s);
  const auto forms = species_forms(s.id, signed_params(s));
  const SpeciesRow& row = species_row(s.id);
  return ConicTriple{make_conic(forms[0], row.kinds[0]), make_conic(forms[1], row.kinds[1]),
                     make_conic(forms[2], row.kinds[2]), s};
}

CurveClass conic_kind_of(const QuadraticForm<double>& q) {
  if (q.xx == 0.0 && q.xy == 0.0 && q.yy == 0.0) {
    throw DegenerateConic("quadratic part is identically zero");
  }
  const double disc = q.xy * q.xy - 4.0 * q.xx * q.yy;
  const double scale = q.xy * q.xy + 4.0 * std::abs(q.xx * q.yy);
  if (is_negligible(disc, scale)) return CurveClass::Parabola;
  return disc < 0.0 ? CurveClass::Circle : CurveClass::Hyperbola;
}

PrincipalForm principal_form(const QuadraticForm<double>& q) {
  PrincipalForm pf;
  if (q.xy != 0.0) {
    const double theta = 0.5 * std::atan2(q.xy, q.xx - q.yy);
    pf.cos_t = std::cos(theta);
    pf.sin_t = std::sin(theta);
  }
  const double c = pf.cos_t;
  const double s = pf.sin_t;
  pf.l1 = q.xx * c * c + q.xy * c * s + q.yy * s * s;
  pf.l2 = q.xx * s * s - q.xy * s * c + q.yy * c * c;
  pf.du = q.x * c + q.y * s;
  pf.dv = -q.x * s + q.y * c;
  pf.c = q.c;

  const double scale = std::abs(q.xx) + std::abs(q.xy) + std::abs(q.yy);
  if (is_negligible(pf.l1, scale)) pf.l1 = 0.0;
  if (is_negligible(pf.l2, scale)) pf.l2 = 0.0;
  if (pf.l1 == 0.0 && pf.l2 != 0.0) {
    // Put the quadratic direction on u by a further exact quarter turn.
    PrincipalForm turned = pf;
    turned.cos_t = -pf.sin_t;
    turned.sin_t = pf.cos_t;
    turned.l1 = pf.l2;
    turned.l2 = 0.0;
    turned.du = pf.dv;
    turned.dv = -pf.du;
    return turned;
  }
  return pf;
}

ImplicitConic make_conic(const QuadraticForm<double>& form, ConicKind kind) {
  const CurveClass cls = conic_kind_of(form);
  const bool consistent =
      (kind == ConicKind::Circle && cls == CurveClass::Circle) ||
      (kind == ConicKind::Parabola && cls == CurveClass::Parabola) ||
      ((kind == ConicKind::DiameterHyperbola || kind == ConicKind::AsymptoticHyperbola) &&
       cls == CurveClass::Hyperbola);
  if (!consistent) {
    throw KindError("conic kind " + std::string(to_string(kind)) +
                    " disagrees with the quadratic discriminant");
  }
  ImplicitConic conic{form, kind, {}, std::nullopt};
  const PrincipalForm pf = principal_form(form);
  switch (kind) {
    case ConicKind::Circle: fill_circle(conic, pf); break;
    case ConicKind::Parabola: fill_parabola(conic, pf); break;
    case ConicKind::DiameterHyperbola:
    case ConicKind::AsymptoticHyperbola: fill_hyperbola(conic, pf); break;
  }
  return conic;
}

double asymptotic_rectangle(const ImplicitConic& conic, double x, double y, double tol) {
  if (conic.kind != ConicKind::AsymptoticHyperbola) {
    throw KindError("asymptotic rectangle needs an asymptotic hyperbola, got " +
                    std::string(to_string(conic.kind)));
  }
  const double residual = normalized_residual(conic, x, y);
  if (residual > tol) {
    throw OffCurveError("point is off the hyperbola (normalized residual " +
                        std::to_string(residual) + ")");
  }
  double product = 1.0;
  for (const Line& line : conic.frame.asymptotes) {
    const double dx = x - line.point.x;
    const double dy = y - line.point.y;
    product *= std::abs(dx * line.direction.y - dy * line.direction.x);
  }
  return product;
}

double locus_height(LocusKind kind, SegmentConfig cfg) {
  if (!(cfg.ab > 0.0) || !(cfg.h_offset > 0.0)) {
    throw DomainError("locus needs AB > 0 and a positive offset for H");
  }
  switch (kind) {
    case LocusKind::SemicircleMean:
      if (!(cfg.h_offset < cfg.ab)) throw DomainError("H must lie strictly inside AB");
      return std::sqrt(cfg.h_offset * (cfg.ab - cfg.h_offset));
    case LocusKind::ParabolaMean:
      return std::sqrt(cfg.ab * cfg.h_offset);
    case LocusKind::DiameterHyperbolaMean:
      return std::sqrt((cfg.ab + cfg.h_offset) * cfg.h_offset);
    case LocusKind::AsymptoticRectangle:
      break;
  }
  throw DomainError("the asymptotic rectangle is not a perpendicular-height locus");
}

}  // namespace khayyam
