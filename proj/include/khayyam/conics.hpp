#pragma once

#include <array>
#include <string_view>

#include "khayyam/core.hpp"
#include "khayyam/error.hpp"

namespace khayyam {

// ---------------------------------------------------------------------------
// Species table
// ---------------------------------------------------------------------------

/// One row of the thirteen-species table, in the treatise's volumetric notation.
struct SpeciesRow {
  SpeciesId id;
  std::string_view equation;   ///< e.g. "x³+b²x=b²l"
  std::string_view working_1;  ///< first displayed conic
  std::string_view working_2;  ///< second displayed conic
  std::string_view hidden;     ///< the third relation, never drawn in the treatise
  std::array<ConicKind, 3> kinds;
  int a_side;  ///< the x-abscissa where the a-factor vanishes, as a sign (0 if a is absent)
  int l_side;  ///< same for l
};

const SpeciesRow& species_row(SpeciesId id);

/// The implicit forms (working_1, working_2, hidden) of a species, transcribed
/// term by term from its three relations. Parameters may carry any sign; this
/// is what reflection collapses substitute into.
template <class T>
std::array<QuadraticForm<T>, 3> species_forms(SpeciesId id, const SignedParams<T>& p) {
  using Q = QuadraticForm<T>;
  const T zero{};
  const T one(1);
  const T a = p.a, b = p.b, c = p.c, l = p.l;
  const T bl = b * l;
  const T al = a * l;
  const Q parabola_by{one, zero, zero, zero, T(-b), zero};  // x^2 = b y
  const Q asym_c{zero, one, zero, zero, zero, T(-(c * c))};  // x y = c^2
  switch (id) {
    case SpeciesId::S1:
      return {parabola_by, Q{one, zero, one, T(-l), zero, zero},
              Q{zero, one, zero, b, zero, T(-bl)}};
    case SpeciesId::S2:
      return {parabola_by, Q{T(-one), zero, one, l, zero, zero},
              Q{zero, T(-one), zero, b, zero, T(-bl)}};
    case SpeciesId::S3:
      return {parabola_by, Q{T(-one), zero, one, T(-l), zero, zero},
              Q{zero, one, zero, T(-b), zero, T(-bl)}};
    case SpeciesId::S4:
      return {asym_c, Q{zero, zero, one, T(-c), zero, T(-(c * a))},
              Q{one, zero, zero, a, T(-c), zero}};
    case SpeciesId::S5:
      return {asym_c, Q{zero, zero, one, c, zero, T(-(c * a))},
              Q{T(-one), zero, zero, a, T(-c), zero}};
    case SpeciesId::S6:
      return {asym_c, Q{zero, zero, one, T(-c), zero, T(c * a)},
              Q{one, zero, zero, T(-a), T(-c), zero}};
    case SpeciesId::S7:
      return {Q{one, zero, one, T(a - l), zero, T(-al)}, Q{zero, one, zero, b, zero, T(-bl)},
              Q{one, zero, zero, a, T(-b), zero}};
    case SpeciesId::S8:
      return {Q{T(-one), zero, one, T(l - a), zero, al}, Q{zero, T(-one), zero, b, zero, T(-bl)},
              Q{one, zero, zero, a, T(-b), zero}};
    case SpeciesId::S9:
      return {Q{one, zero, one, T(l - a), zero, T(-al)}, Q{zero, one, zero, T(-b), zero, T(-bl)},
              Q{T(-one), zero, zero, a, T(-b), zero}};
    case SpeciesId::S10:
      return {Q{T(-one), zero, one, T(a - l), zero, al}, Q{zero, one, zero, T(-b), zero, T(-bl)},
              Q{one, zero, zero, T(-a), T(-b), zero}};
    case SpeciesId::S11:
      return {Q{T(-one), zero, one, T(-(l + a)), zero, T(-al)},
              Q{zero, one, zero, T(-b), zero, T(-bl)}, Q{one, zero, zero, a, T(-b), zero}};
    case SpeciesId::S12:
      return {Q{one, zero, one, T(-(l + a)), zero, al}, Q{zero, one, zero, b, zero, T(-bl)},
              Q{one, zero, zero, T(-a), T(-b), zero}};
    case SpeciesId::S13:
      return {Q{T(-one), zero, one, T(l + a), zero, T(-al)},
              Q{zero, T(-one), zero, b, zero, T(-bl)}, Q{one, zero, zero, T(-a), T(-b), zero}};
  }
  throw DomainError("unknown species");
}

/// Exact-rational triple of a species instance.
std::array<QuadraticForm<Rational>, 3> exact_forms(const ExactSpecies& s);

/// Working pair plus hidden conic with kinds and local frames filled in.
ConicTriple build_triple(const SpeciesInstance& s);

// ---------------------------------------------------------------------------
// Conic geometry
// ---------------------------------------------------------------------------

enum class CurveClass { Circle, Parabola, Hyperbola };

/// Discriminant classification xy^2 - 4 xx yy: zero parabola, negative circle
/// (ellipse class), positive hyperbola. Throws DegenerateConic when the
/// quadratic part vanishes.
CurveClass conic_kind_of(const QuadraticForm<double>& q);

/// The form rewritten on its principal axes: with (u, v) the rotation of
/// (x, y) by the stored angle, the conic reads l1 u^2 + l2 v^2 + du u + dv v + c.
/// Axis-aligned forms keep cos = 1, sin = 0 exactly. For parabolas l1 != 0 = l2.
struct PrincipalForm {
  double cos_t = 1.0;
  double sin_t = 0.0;
  double l1 = 0.0;
  double l2 = 0.0;
  double du = 0.0;
  double dv = 0.0;
  double c = 0.0;

  Point2 to_world(double u, double v) const {
    return {u * cos_t - v * sin_t, u * sin_t + v * cos_t};
  }
};

PrincipalForm principal_form(const QuadraticForm<double>& q);

/// Attaches kind and frame metadata. Throws KindError when the kind disagrees
/// with the discriminant, DegenerateConic for an empty or point circle.
ImplicitConic make_conic(const QuadraticForm<double>& form, ConicKind kind);

/// Product of the perpendicular distances from (x, y) to the two asymptotes.
/// Throws KindError for other kinds and OffCurveError when the normalized
/// residual at (x, y) exceeds tol.
double asymptotic_rectangle(const ImplicitConic& conic, double x, double y, double tol = 1e-9);

// ---------------------------------------------------------------------------
// Geometric-mean loci
// ---------------------------------------------------------------------------

enum class LocusKind { SemicircleMean, ParabolaMean, DiameterHyperbolaMean, AsymptoticRectangle };

/// AB is the fixed segment. h_offset is AH for the semicircle and HB (beyond B)
/// for the parabola and diameter-hyperbola loci.
struct SegmentConfig {
  double ab = 0.0;
  double h_offset = 0.0;
};

/// Height CH of the perpendicular at H:
///   semicircle          CH^2 = AH * HB
///   parabola            CH^2 = AB * HB
///   diameter hyperbola  CH^2 = HA * HB
double locus_height(LocusKind kind, SegmentConfig cfg);

}  // namespace khayyam
