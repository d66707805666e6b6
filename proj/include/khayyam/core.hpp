#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string_view>
#include <vector>

#include "khayyam/rational.hpp"

namespace khayyam {

// ---------------------------------------------------------------------------
// Cubic equations
// ---------------------------------------------------------------------------

/// Monic real cubic x^3 + A x^2 + B x + C = 0. The leading coefficient is
/// structural and never stored.
template <class T>
struct BasicCubic {
  T A{};
  T B{};
  T C{};

  friend bool operator==(const BasicCubic&, const BasicCubic&) = default;
};

using CubicEquation = BasicCubic<double>;
using ExactCubic = BasicCubic<Rational>;

/// Horner evaluation in the fixed order ((x + A) x + B) x + C.
template <class T>
T evaluate_cubic(const BasicCubic<T>& eq, const T& x) {
  T acc = x + eq.A;
  acc = acc * x + eq.B;
  acc = acc * x + eq.C;
  return acc;
}

/// max(1, |A|, |B|, |C|); the scale used for cubic residual thresholds.
inline double coefficient_scale(const CubicEquation& eq) {
  return std::max({1.0, std::abs(eq.A), std::abs(eq.B), std::abs(eq.C)});
}

// ---------------------------------------------------------------------------
// Species
// ---------------------------------------------------------------------------

enum class SpeciesId : int { S1 = 1, S2, S3, S4, S5, S6, S7, S8, S9, S10, S11, S12, S13 };

inline constexpr std::array<SpeciesId, 13> kAllSpecies = {
    SpeciesId::S1, SpeciesId::S2,  SpeciesId::S3,  SpeciesId::S4,  SpeciesId::S5,
    SpeciesId::S6, SpeciesId::S7,  SpeciesId::S8,  SpeciesId::S9,  SpeciesId::S10,
    SpeciesId::S11, SpeciesId::S12, SpeciesId::S13};

constexpr int number_of(SpeciesId id) { return static_cast<int>(id); }
std::string_view to_string(SpeciesId id);
std::optional<SpeciesId> species_from_string(std::string_view name);

/// Which of the segments a, b, c, l a species carries.
struct ParamUse {
  bool a = false;
  bool b = false;
  bool c = false;
  bool l = false;
};

constexpr ParamUse params_of(SpeciesId id) {
  const int n = number_of(id);
  if (n <= 3) return {false, true, false, true};
  if (n <= 6) return {true, false, true, false};
  return {true, true, false, true};
}

/// A species together with its positive parameters. Absent parameters are
/// empty; present ones are strictly positive (see validate()).
template <class T>
struct BasicSpecies {
  SpeciesId id = SpeciesId::S1;
  std::optional<T> a;
  std::optional<T> b;
  std::optional<T> c;
  std::optional<T> l;

  friend bool operator==(const BasicSpecies&, const BasicSpecies&) = default;
};

using SpeciesInstance = BasicSpecies<double>;
using ExactSpecies = BasicSpecies<Rational>;

/// Throws DomainError unless the parameter set matches the species and every
/// present parameter is strictly positive (and finite).
template <class T>
void validate(const BasicSpecies<T>& s);

template <class T>
BasicSpecies<T> species_bl(SpeciesId id, T b, T l) {
  BasicSpecies<T> s{id, std::nullopt, std::move(b), std::nullopt, std::move(l)};
  validate(s);
  return s;
}

template <class T>
BasicSpecies<T> species_ac(SpeciesId id, T a, T c) {
  BasicSpecies<T> s{id, std::move(a), std::nullopt, std::move(c), std::nullopt};
  validate(s);
  return s;
}

template <class T>
BasicSpecies<T> species_abl(SpeciesId id, T a, T b, T l) {
  BasicSpecies<T> s{id, std::move(a), std::move(b), std::nullopt, std::move(l)};
  validate(s);
  return s;
}

/// Parameter values with signs allowed; absent parameters read as zero. This is
/// the input of the symbolic species table, which sign-flip collapses also use.
template <class T>
struct SignedParams {
  T a{};
  T b{};
  T c{};
  T l{};
};

template <class T>
SignedParams<T> signed_params(const BasicSpecies<T>& s) {
  SignedParams<T> p;
  if (s.a) p.a = *s.a;
  if (s.b) p.b = *s.b;
  if (s.c) p.c = *s.c;
  if (s.l) p.l = *s.l;
  return p;
}

// ---------------------------------------------------------------------------
// Conics
// ---------------------------------------------------------------------------

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

struct Line {
  Point2 point;
  Point2 direction;  // unit length
};

/// xx x^2 + xy x y + yy y^2 + x x + y y + c.
template <class T>
struct QuadraticForm {
  T xx{};
  T xy{};
  T yy{};
  T x{};
  T y{};
  T c{};

  std::array<T, 6> coefficients() const { return {xx, xy, yy, x, y, c}; }
  static QuadraticForm from(const std::array<T, 6>& k) {
    return {k[0], k[1], k[2], k[3], k[4], k[5]};
  }

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
};

/// Fixed evaluation order: xx x x, + xy x y, + yy y y, + x, + y, + c.
template <class T>
T evaluate_form(const QuadraticForm<T>& q, const T& px, const T& py) {
  T acc = q.xx * px * px;
  acc = acc + q.xy * px * py;
  acc = acc + q.yy * py * py;
  acc = acc + q.x * px;
  acc = acc + q.y * py;
  acc = acc + q.c;
  return acc;
}

double max_abs_coefficient(const QuadraticForm<double>& q);

enum class ConicKind { Circle, Parabola, DiameterHyperbola, AsymptoticHyperbola };
std::string_view to_string(ConicKind kind);

/// The Apollonian coordinate cross a conic is constructed on.
struct LocalFrame {
  Point2 origin;                 ///< vertex (parabola) or center (circle, hyperbolas)
  Point2 axis{1.0, 0.0};         ///< unit direction of the diameter
  std::vector<Point2> vertices;  ///< diameter endpoints (circle, diameter hyperbola)
  std::vector<Line> asymptotes;  ///< hyperbolas only
  std::optional<double> radius;  ///< circles only
};

struct ImplicitConic {
  QuadraticForm<double> form;
  ConicKind kind = ConicKind::Circle;
  LocalFrame frame;
  std::optional<double> parameter_p;  ///< parabolas only
};

double evaluate_conic(const ImplicitConic& conic, double x, double y);

/// |evaluate_conic| divided by the largest absolute coefficient.
double normalized_residual(const ImplicitConic& conic, double x, double y);

enum class ConicRole { Working1, Working2, Hidden };
std::string_view to_string(ConicRole role);

struct ConicTriple {
  ImplicitConic working_1;
  ImplicitConic working_2;
  ImplicitConic hidden;
  SpeciesInstance species;

  const ImplicitConic& operator[](ConicRole role) const {
    switch (role) {
      case ConicRole::Working1: return working_1;
      case ConicRole::Working2: return working_2;
      case ConicRole::Hidden: break;
    }
    return hidden;
  }
};

// ---------------------------------------------------------------------------
// Solutions
// ---------------------------------------------------------------------------

struct IntersectionPoint {
  double x = 0.0;
  double y = 0.0;
  double residual_1 = 0.0;  ///< normalized residual on the first conic
  double residual_2 = 0.0;  ///< normalized residual on the second conic
  int multiplicity = 1;     ///< 2 at a tangency
};

struct RealRoot {
  double value = 0.0;
  int multiplicity = 1;
};

/// A positive root read off an intersection of the working pair.
struct AcceptedRoot {
  double x = 0.0;
  double y = 0.0;  ///< companion ordinate
  int multiplicity = 1;
  double cubic_residual = 0.0;   ///< |x^3 + A x^2 + B x + C|
  double hidden_residual = 0.0;  ///< normalized residual of the hidden conic at (x, y)
};

struct SolveReport {
  CubicEquation cubic;
  SpeciesInstance species;
  ConicTriple triple;
  std::vector<IntersectionPoint> intersections;
  std::vector<AcceptedRoot> roots;     ///< ascending, positive
  std::vector<RealRoot> oracle_roots;  ///< ascending, positive
  bool agreement = false;
};

/// Number of roots counted with multiplicity.
std::size_t root_count(const std::vector<AcceptedRoot>& roots);
std::size_t root_count(const std::vector<RealRoot>& roots);

}  // namespace khayyam
